# -*- coding: utf-8 -*-
import sys

from core.cli import run

if __name__ == '__main__':
    sys.exit(run())
