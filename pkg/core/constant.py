# -*- coding: utf-8 -*-
import os

# oracle
ORACLE_EDGE_CAP = 16  # brute_force拒绝的边数上限

# sequential coloring
KEMPE_BUDGET_FACTOR = 1  # Kempe链交换次数上限 = factor * |E|^2

# theorem-stress
THISPATH = os.path.abspath(os.getcwd())
STRESS_DIR = os.path.join(THISPATH, "stress")  # 定理反例实例的保存目录
STRESS_NAME = 'stress_{stage}_{stamp}.json'  # stage, time stamp

# random instances
DEFAULT_SEED = 0

# dot export
DOT_PALETTE = ('red', 'blue', 'darkgreen', 'orange', 'purple', 'brown', 'magenta', 'cyan4', 'gold3', 'gray40')


class SOLVER(object):
    HEURISTIC = "heuristic"
    EXACT = "exact"
    HYBRID = "hybrid"
    # sequential_color实际使用的阶段
    FALLBACK = "fallback"
    # best-effort时由oracle给出
    ORACLE = "oracle"


class SHAPE(object):
    STARFOREST = "starforest"
    STAR = "star"


class SIDE(object):
    X = "x"
    Y = "y"
    AUTO = "auto"


class FORMAT(object):
    JSON = "json"
    EDGELIST = "edgelist"


class EXIT_CODE(object):
    SUCCESS = 0
    MALFORMED = 1
    PRECONDITION = 2
    NONE_EXISTS = 3
    VERIFICATION = 4


# logger filter_level
def filter_level(record):
    """
    需要过滤的等级
    'DEBUG' 'INFO' 'SUCCESS' 'WARNING' 'ERROR'
    """
    level = []
    return record["level"].name not in level
