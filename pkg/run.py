#!/usr/bin/env python3
"""
Stieltjes toolkit - Main Entry Point
"""

from src.cli.runner import main

if __name__ == "__main__":
    main()
