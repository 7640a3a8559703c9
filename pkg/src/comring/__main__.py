"""Entry point for ``python -m comring``."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
