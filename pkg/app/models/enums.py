from enum import Enum


class LabelConvention(str, Enum):
    """泛函标签约定"""
    RIGHT_NESTED = "right_nested"   # x_{ijk} = [x_i,[x_j,x_k]], 值给在具名基 B_l 上
    LYNDON = "lyndon"               # 规范基的 Lyndon 标签


class SurjectivityStatus(str, Enum):
    """满射性搜索结果"""
    SURJECTIVE = "surjective"       # 所有 p_i, q_i 均已找到表达式
    INCONCLUSIVE = "inconclusive"   # 在给定词长内未找到, 不构成反驳


class Subcommand(str, Enum):
    """命令行子命令"""
    SERIES = "series"
    QUOTIENT = "quotient"
    KOSZUL = "koszul"
    ORBIT = "orbit"
    WEYLMAP = "weylmap"
    VERIFY_ALL = "verify-all"
