"""Entry point for running polyharm as a module."""

from polyharm.cli import main

if __name__ == "__main__":
    main()
