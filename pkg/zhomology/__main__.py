#!/usr/bin/env python3
"""
__main__.py for zhomology
To launch zhomology as a module

> python -m zhomology (with Python >= 3.7)
"""

from zhomology import main

if __name__ == '__main__':
    main.main()
