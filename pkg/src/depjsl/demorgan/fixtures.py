from __future__ import annotations
"""
The free one-generated SAJ, SAM and SAI algebras.

Elements are named by the term that produces them from the generator ``x``:
``s`` applies σ, ``|`` is join and ``bot`` is ⊥, so ``"s(x|sx)"`` reads
σ(x ∨ σx). The tables are validated against the axioms when first built.
"""

import logging
from functools import lru_cache
from typing import Dict, Hashable, List, Tuple

from depjsl.demorgan.algebra import AlgebraKind, UnaryAlgebra, check_unary_algebra
from depjsl.errors import ParseError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import poset_validate
from depjsl.jsl.morphism import JslMorphism
from depjsl.jsl.semilattice import Jsl

__all__ = [
    "GENERATOR",
    "free_one_generated",
    "evaluate_term",
    "free_extension",
]

logger = logging.getLogger(__name__)

GENERATOR = "x"

# (elements, covers, σ)
_TABLES: Dict[AlgebraKind, Tuple[Tuple[str, ...], List[Tuple[str, str]], Dict[str, str]]] = {
    AlgebraKind.SAI: (
        ("bot", "s(x|sx)", "x", "sx", "x|sx", "s(bot)"),
        [
            ("bot", "s(x|sx)"),
            ("s(x|sx)", "x"),
            ("s(x|sx)", "sx"),
            ("x", "x|sx"),
            ("sx", "x|sx"),
            ("x|sx", "s(bot)"),
        ],
        {
            "bot": "s(bot)",
            "s(bot)": "bot",
            "x": "sx",
            "sx": "x",
            "s(x|sx)": "x|sx",
            "x|sx": "s(x|sx)",
        },
    ),
    AlgebraKind.SAJ: (
        (
            "bot", "x", "ssbot", "x|ssbot", "s(x|sx)", "x|s(x|sx)",
            "sx", "ssx", "x|sx", "sx|ssx", "ss(x|sx)", "s(bot)",
        ),
        [
            ("bot", "x"),
            ("bot", "ssbot"),
            ("x", "x|ssbot"),
            ("ssbot", "s(x|sx)"),
            ("ssbot", "x|ssbot"),
            ("x|ssbot", "x|s(x|sx)"),
            ("s(x|sx)", "x|s(x|sx)"),
            ("s(x|sx)", "sx"),
            ("x|s(x|sx)", "ssx"),
            ("x|s(x|sx)", "x|sx"),
            ("sx", "x|sx"),
            ("ssx", "sx|ssx"),
            ("x|sx", "sx|ssx"),
            ("sx|ssx", "ss(x|sx)"),
            ("ss(x|sx)", "s(bot)"),
        ],
        {
            "bot": "s(bot)",
            "x": "sx",
            "ssbot": "s(bot)",
            "x|ssbot": "sx",
            "s(x|sx)": "ss(x|sx)",
            "x|s(x|sx)": "sx",
            "sx": "ssx",
            "ssx": "sx",
            "x|sx": "s(x|sx)",
            "sx|ssx": "s(x|sx)",
            "ss(x|sx)": "s(x|sx)",
            "s(bot)": "ssbot",
        },
    ),
    AlgebraKind.SAM: (
        ("bot", "s(x|sx)", "sx", "ssx", "x", "ss(x|sx)", "s(bot)", "x|sx", "x|s(bot)"),
        [
            ("bot", "s(x|sx)"),
            ("s(x|sx)", "sx"),
            ("s(x|sx)", "ssx"),
            ("sx", "ss(x|sx)"),
            ("ssx", "ss(x|sx)"),
            ("ssx", "x"),
            ("ss(x|sx)", "s(bot)"),
            ("ss(x|sx)", "x|sx"),
            ("x", "x|sx"),
            ("s(bot)", "x|s(bot)"),
            ("x|sx", "x|s(bot)"),
        ],
        {
            "bot": "s(bot)",
            "s(bot)": "bot",
            "x|s(bot)": "bot",
            "x|sx": "s(x|sx)",
            "s(x|sx)": "ss(x|sx)",
            "ss(x|sx)": "s(x|sx)",
            "x": "sx",
            "sx": "ssx",
            "ssx": "sx",
        },
    ),
}


# ---------------------------------------------------------------------------
# term evaluation
# ---------------------------------------------------------------------------

class _TermReader:
    """Recursive descent over ``join := unary ('|' unary)*``, ``unary := 's' unary | '(' join ')' | 'x' | 'bot'``."""

    def __init__(self, text: str, alg: UnaryAlgebra, generator: int) -> None:
        self.text = text
        self.pos = 0
        self.alg = alg
        self.generator = generator

    def fail(self) -> ParseError:
        return ParseError(f"malformed term {self.text!r} at offset {self.pos}", line=None, witness=self.text)

    def join(self) -> int:
        q = self.alg.base
        acc = self.unary()
        while self.text.startswith("|", self.pos):
            self.pos += 1
            acc = int(q.join_table[acc, self.unary()])
        return acc

    def unary(self) -> int:
        t = self.text
        if t.startswith("bot", self.pos):
            self.pos += 3
            return self.alg.base.bot
        if t.startswith("s", self.pos):
            self.pos += 1
            return self.alg.sigma[self.unary()]
        if t.startswith(GENERATOR, self.pos):
            self.pos += 1
            return self.generator
        if t.startswith("(", self.pos):
            self.pos += 1
            val = self.join()
            if not t.startswith(")", self.pos):
                raise self.fail()
            self.pos += 1
            return val
        raise self.fail()

    def read(self) -> int:
        val = self.join()
        if self.pos != len(self.text):
            raise self.fail()
        return val


def evaluate_term(term: str, alg: UnaryAlgebra, value: Hashable) -> Hashable:
    """Value of *term* in *alg* with the generator interpreted as *value*."""
    reader = _TermReader(term, alg, alg.base.index(value))
    return alg.base[reader.read()]


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def free_one_generated(kind: AlgebraKind | str) -> UnaryAlgebra:
    """The free *kind* algebra on one generator named ``"x"``: 12 (SAJ), 9 (SAM) or 6 (SAI) elements."""
    kind = AlgebraKind(kind)
    elements, covers, sigma = _TABLES[kind]
    base = Jsl(poset_validate(FinSet(elements), covers))
    alg = check_unary_algebra(base, sigma, kind)
    # each name must denote itself
    for name in elements:
        got = evaluate_term(name, alg, GENERATOR)
        assert got == name, f"{kind.value} fixture: term {name!r} evaluates to {got!r}"
    logger.debug("built free one-generated %s algebra (%d elements)", kind.value, len(alg))
    return alg


def free_extension(kind: AlgebraKind | str, target: UnaryAlgebra, value: Hashable) -> JslMorphism:
    """
    The homomorphism from the free algebra to *target* sending ``x`` to *value*.

    Each element's term is evaluated in *target*; the result is validated as
    a semilattice morphism.
    """
    free = free_one_generated(kind)
    images = tuple(target.base.index(evaluate_term(name, target, value)) for name in free.base.elements)
    return JslMorphism(free.base, target.base, images)
