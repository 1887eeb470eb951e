"""自由李代数 f(n) 的 Lyndon 基, 标准括号化与张量展开

约定: Lyndon 词 w 的标准括号化 P_w 在张量代数中展开为 w 加上字典序更大的词,
因此从张量表示回到 Lyndon 坐标只需按字典序做三角消元.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from app.config.settings import settings
from app.models.lie import BracketTree, FreeLieElement, LyndonWord, Word, is_lyndon
from app.utils.exceptions import InvalidInputError, NotLieElementError

logger = logging.getLogger(__name__)

Tensor = Dict[Word, Fraction]


def _check_degree(j: int):
    if j > settings.degree_cap:
        raise InvalidInputError(f"次数 {j} 超过全局上限 {settings.degree_cap}")


@lru_cache(maxsize=None)
def _lyndon_words(n: int, j: int) -> Tuple[Word, ...]:
    # Duval 算法按字典序生成长度不超过 j 的 Lyndon 词
    words = []
    w = [0]
    while w:
        w[-1] += 1
        if len(w) == j:
            words.append(tuple(a for a in w))
        m = len(w)
        while len(w) < j:
            w.append(w[len(w) - m])
        while w and w[-1] == n:
            w.pop()
    return tuple(words)


def lyndon_basis(n: int, j: int) -> List[LyndonWord]:
    """长度为 j 的 Lyndon 词, 按字典序排列"""
    if n < 2 or j < 1:
        raise InvalidInputError(f"需要 n >= 2 且 j >= 1, 收到 n={n}, j={j}")
    _check_degree(j)
    return [LyndonWord(w, n) for w in _lyndon_words(n, j)]


@lru_cache(maxsize=None)
def _standard_split(word: Word) -> Tuple[Word, Word]:
    for k in range(1, len(word)):
        if is_lyndon(word[k:]):
            return word[:k], word[k:]
    raise ValueError(f"长度为1的词没有标准分解: {word}")


def standard_bracketing(w: LyndonWord) -> BracketTree:
    """标准分解 w = uv (v 为最长真 Lyndon 后缀) 递归得到的括号树"""
    return _bracketing(w.letters)


def _bracketing(word: Word) -> BracketTree:
    if len(word) == 1:
        return BracketTree.generator(word[0])
    u, v = _standard_split(word)
    return BracketTree.bracket(_bracketing(u), _bracketing(v))


def _tensor_mul(a: Tensor, b: Tensor) -> Tensor:
    out: Tensor = {}
    for u, c in a.items():
        for v, d in b.items():
            w = u + v
            out[w] = out.get(w, Fraction(0)) + c * d
    return out


def _tensor_commutator(a: Tensor, b: Tensor) -> Tensor:
    out = _tensor_mul(a, b)
    for w, c in _tensor_mul(b, a).items():
        out[w] = out.get(w, Fraction(0)) - c
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=None)
def _lyndon_tensor(word: Word) -> Tuple[Tuple[Word, Fraction], ...]:
    if len(word) == 1:
        return ((word, Fraction(1)),)
    u, v = _standard_split(word)
    t = _tensor_commutator(dict(_lyndon_tensor(u)), dict(_lyndon_tensor(v)))
    return tuple(sorted(t.items()))


def to_tensor(e: FreeLieElement) -> Tensor:
    """f(n) 嵌入张量代数 TV(n) 的像, [a,b] = ab - ba"""
    out: Tensor = {}
    for word, c in e.terms.items():
        for w, d in _lyndon_tensor(word):
            out[w] = out.get(w, Fraction(0)) + c * d
    return {w: c for w, c in out.items() if c}


def from_tensor(t: Tensor, j: int, n: int) -> FreeLieElement:
    """张量展开还原为 Lyndon 坐标; 残差非零说明输入不是李元素"""
    residual = {w: Fraction(c) for w, c in t.items() if c}
    for w in residual:
        if len(w) != j:
            raise NotLieElementError(f"张量含有次数 {len(w)} 的词, 期望次数 {j}")
    terms: Dict[Word, Fraction] = {}
    for word in _lyndon_words(n, j):
        c = residual.get(word)
        if not c:
            continue
        terms[word] = c
        for w, d in _lyndon_tensor(word):
            value = residual.get(w, Fraction(0)) - c * d
            if value:
                residual[w] = value
            else:
                residual.pop(w, None)
    if residual:
        w = min(residual)
        raise NotLieElementError(f"消元后残差非零, 最小词 {''.join(map(str, w))} 系数 {residual[w]}")
    return FreeLieElement(n, terms)


def bracket(a: FreeLieElement, b: FreeLieElement) -> FreeLieElement:
    """自由李代数中的括号, 经张量展开 ab - ba 再还原"""
    if a.n != b.n:
        raise InvalidInputError(f"字母表大小不一致: {a.n} != {b.n}")
    n = a.n
    if a.is_zero() or b.is_zero():
        return FreeLieElement.zero(n)
    result = FreeLieElement.zero(n)
    # 按次数分块, 保证每一块是齐次的
    for da in a.degrees():
        pa = FreeLieElement(n, {w: c for w, c in a.terms.items() if len(w) == da})
        for db in b.degrees():
            pb = FreeLieElement(n, {w: c for w, c in b.terms.items() if len(w) == db})
            _check_degree(da + db)
            t = _tensor_commutator(to_tensor(pa), to_tensor(pb))
            result = result + from_tensor(t, da + db, n)
    return result


def evaluate_tree(tree: BracketTree, n: int) -> FreeLieElement:
    """括号树在自由李代数中的值"""
    if tree.is_leaf:
        if not 1 <= tree.leaf <= n:
            raise InvalidInputError(f"生成元 x{tree.leaf} 超出范围 1..{n}")
        return FreeLieElement.basis(n, (tree.leaf,))
    return bracket(evaluate_tree(tree.left, n), evaluate_tree(tree.right, n))


def word_label(word: Word) -> str:
    """词的数字串表示, 如 "112" """
    return "".join(str(a) for a in word)
