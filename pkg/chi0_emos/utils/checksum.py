import hashlib
import os
from pathlib import Path

CHUNK_SIZE = 1 << 16


def generate_checksum(file_path) -> str:
    """Generate a SHA-256 checksum of the file contents."""
    digest = hashlib.sha256()
    with open(file_path, "rb") as data_file:
        for chunk in iter(lambda: data_file.read(CHUNK_SIZE), b""):
            digest.update(chunk)
    return digest.hexdigest()


def write_checksum_manifest(file_paths, manifest_path, base_dir) -> Path:
    """Write `<checksum>  <relative path>` lines, sorted by path, in sha256sum format."""
    base_dir = Path(base_dir)
    lines = sorted(
        f"{generate_checksum(path)}  {Path(path).relative_to(base_dir).as_posix()}"
        for path in file_paths
    )
    manifest_path = Path(manifest_path)
    with open(manifest_path, "w", encoding="utf-8", newline="\n") as manifest:
        manifest.write("\n".join(lines) + "\n")
    return manifest_path


def check_checksum_manifest(manifest_path) -> list[str]:
    """Relative paths whose current checksum differs from the manifest, or that are missing."""
    manifest_path = Path(manifest_path)
    if not os.path.exists(manifest_path):
        raise FileNotFoundError(f"The checksum manifest {manifest_path} does not exist.")

    mismatched = []
    with open(manifest_path, "r", encoding="utf-8") as manifest:
        for line in manifest:
            if not line.strip():
                continue
            stored_checksum, relative = line.rstrip("\n").split("  ", 1)
            data_file_path = manifest_path.parent / relative
            if not data_file_path.exists() or generate_checksum(data_file_path) != stored_checksum:
                mismatched.append(relative)
    return mismatched
