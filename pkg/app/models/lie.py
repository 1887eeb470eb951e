from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

Word = Tuple[int, ...]


def is_lyndon(word: Word) -> bool:
    """非空且严格小于其所有真旋转"""
    if not word:
        return False
    return all(word < word[k:] + word[:k] for k in range(1, len(word)))


@dataclass(frozen=True, order=True)
class LyndonWord:
    """字母表 1..n 上的 Lyndon 词"""
    letters: Word
    n: int = field(compare=False)

    def __post_init__(self):
        if any(not 1 <= a <= self.n for a in self.letters):
            raise ValueError(f"字母超出范围 1..{self.n}: {self.letters}")
        if not is_lyndon(self.letters):
            raise ValueError(f"不是 Lyndon 词: {self.letters}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return "".join(str(a) for a in self.letters)


@dataclass(frozen=True)
class BracketTree:
    """二叉括号树; 叶子为生成元下标"""
    leaf: Optional[int] = None
    left: Optional["BracketTree"] = None
    right: Optional["BracketTree"] = None

    def __post_init__(self):
        if (self.leaf is None) == (self.left is None or self.right is None):
            raise ValueError("括号树节点必须是叶子或恰有两棵子树")

    @classmethod
    def generator(cls, i: int) -> "BracketTree":
        return cls(leaf=i)

    @classmethod
    def bracket(cls, left: "BracketTree", right: "BracketTree") -> "BracketTree":
        return cls(left=left, right=right)

    @classmethod
    def right_nested(cls, indices: Word) -> "BracketTree":
        """x_{ijk} = [x_i,[x_j,x_k]] 的约定"""
        if not indices:
            raise ValueError("下标序列不能为空")
        tree = cls.generator(indices[-1])
        for i in reversed(indices[:-1]):
            tree = cls.bracket(cls.generator(i), tree)
        return tree

    @classmethod
    def parse(cls, text: str) -> "BracketTree":
        """解析 "[x1,[x1,x2]]" 形式"""
        text = text.replace(" ", "")
        tree, rest = _parse(text)
        if rest:
            raise ValueError(f"括号表达式多余字符: {rest!r}")
        return tree

    @property
    def is_leaf(self) -> bool:
        return self.leaf is not None

    @property
    def degree(self) -> int:
        return 1 if self.is_leaf else self.left.degree + self.right.degree

    def leaves(self) -> Word:
        if self.is_leaf:
            return (self.leaf,)
        return self.left.leaves() + self.right.leaves()

    def __str__(self):
        if self.is_leaf:
            return f"x{self.leaf}"
        return f"[{self.left},{self.right}]"


def _parse(text: str):
    if text.startswith("x"):
        k = 1
        while k < len(text) and text[k].isdigit():
            k += 1
        if k == 1:
            raise ValueError(f"无法解析生成元: {text!r}")
        return BracketTree.generator(int(text[1:k])), text[k:]
    if text.startswith("["):
        left, rest = _parse(text[1:])
        if not rest.startswith(","):
            raise ValueError(f"缺少逗号: {rest!r}")
        right, rest = _parse(rest[1:])
        if not rest.startswith("]"):
            raise ValueError(f"缺少右括号: {rest!r}")
        return BracketTree.bracket(left, right), rest[1:]
    raise ValueError(f"无法解析括号表达式: {text!r}")


Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class FreeLieElement:
    """自由李代数 f(n) 中的元素: Lyndon 基 (标准括号化) 上的有理线性组合"""
    n: int
    terms: Dict[Word, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {w: Fraction(c) for w, c in self.terms.items() if c}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basis(cls, n: int, word: Word) -> "FreeLieElement":
        LyndonWord(tuple(word), n)
        return cls(n, {tuple(word): Fraction(1)})

    @classmethod
    def zero(cls, n: int) -> "FreeLieElement":
        return cls(n, {})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self):
        return sorted({len(w) for w in self.terms})

    @property
    def degree(self) -> Optional[int]:
        """齐次元的次数; 零元返回 None"""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise ValueError(f"元素不是齐次的: 次数 {ds}")
        return ds[0]

    def _check(self, other: "FreeLieElement"):
        if self.n != other.n:
            raise ValueError(f"字母表大小不一致: {self.n} != {other.n}")

    def __add__(self, other: "FreeLieElement") -> "FreeLieElement":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return FreeLieElement(self.n, out)

    def __neg__(self) -> "FreeLieElement":
        return FreeLieElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreeLieElement") -> "FreeLieElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "FreeLieElement":
        return FreeLieElement(self.n, {w: c * v for w, v in self.terms.items()})

    def __rmul__(self, c: Scalar) -> "FreeLieElement":
        return self.scale(c)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            parts.append(f"{self.terms[w]}*x{''.join(str(a) for a in w)}")
        return " + ".join(parts)
