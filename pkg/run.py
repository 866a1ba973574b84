#!/usr/bin/env python3
"""
Run Johnson Sep
===============

Usage:
    python run.py verify-claim1 --rank 3 --mod 2 --exp 2

Or through the installed console script:
    johnson-sep verify-claim1 --rank 3 --mod 2 --exp 2
"""

from johnson_sep.cli import app

if __name__ == "__main__":
    app()
