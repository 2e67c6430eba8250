"""Module entry point."""

from .cli import main

main()
