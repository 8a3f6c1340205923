import sys

from dotenv import load_dotenv

from chi0_emos.app import App


def main():
    load_dotenv()
    sys.exit(App().start(sys.argv[1:]))


if __name__ == "__main__":
    main()
