"""
Main entry point for the braidmfw command-line tool.

    python -m src.main mfw aaacBAAcB --braid-index 4
    python -m src.main verify-paper --suite five-knots
"""
import sys

from src.frontend.cli import main

if __name__ == "__main__":
    sys.exit(main())
