import sys

from cli.runner import run

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
