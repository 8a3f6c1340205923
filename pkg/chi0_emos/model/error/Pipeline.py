class PipelineException(Exception):
    """Base class for exceptions in the pipeline."""
    pass

class InvalidRunConfigException(PipelineException, ValueError):
    """Exception raised for an invalid run configuration."""
    pass
