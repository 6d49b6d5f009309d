#! usr/bin/python
# -*- coding:utf-8 -*-
import sys
import math
from loguru import logger as loguru
from core.constant import filter_level


def initLogger(level='INFO'):
    loguru.remove()  # 清除自带的
    loguru.add(sys.stderr, format="<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> <red>|</red> "
                                  "<level><b>{level}</b></level>     <red>|</red> "
                                  "<cyan>{name}</cyan><red>:</red>"
                                  "<cyan>{function}</cyan><red>:</red>"
                                  "<cyan>{line}</cyan> <red>-</red> "
                                  "<level>{message}</level>",
               colorize=True, filter=filter_level, level=level)


def triangular_root(e: int):
    """
    Returns n with n(n+1)/2 == e, or None
    """
    if e < 1:
        return None
    n = (math.isqrt(8 * e + 1) - 1) // 2
    return n if n * (n + 1) // 2 == e else None


def parse_csv_ints(text: str):
    """'1,2,3' -> (1, 2, 3)"""
    if not text.strip():
        return ()
    return tuple(int(v) for v in text.split(','))
