#!/usr/bin/env python3
"""
Main entry point for the curvebounds command line
"""

import sys
from pathlib import Path

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent))

from src.cli.curvebounds_cli import main

if __name__ == "__main__":
    sys.exit(main())
