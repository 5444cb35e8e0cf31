"""Seifert matrices of multilinks and the determinant det(A+ - t A-)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence, Union

from .laurent import LaurentPoly, UnitClass, canonicalize
from .matrices import det

IntMatrix = tuple[tuple[int, ...], ...]


class SeifertError(ValueError):
    pass


def _as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


@dataclass(frozen=True)
class SeifertPair:
    """Matrices of the two Seifert forms, shape ``n x (n + r)``.

    ``shape`` must be given explicitly only when ``n == 0``.
    """

    a_plus: IntMatrix
    a_minus: IntMatrix
    mu: Optional[int] = None
    m: Optional[tuple[int, ...]] = None
    shape: Optional[tuple[int, int]] = None

    def __post_init__(self):
        ap, am = _as_matrix(self.a_plus), _as_matrix(self.a_minus)
        object.__setattr__(self, "a_plus", ap)
        object.__setattr__(self, "a_minus", am)
        if self.m is not None:
            object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        rows = len(ap)
        cols = len(ap[0]) if ap else (self.shape[1] if self.shape else 0)
        if self.shape is not None and tuple(self.shape) != (rows, cols):
            raise SeifertError(f"declared shape {tuple(self.shape)} does not match matrices ({rows}, {cols})")
        for name, a in (("a_plus", ap), ("a_minus", am)):
            if len(a) != rows or any(len(r) != cols for r in a):
                raise SeifertError(f"{name} is not a {rows} x {cols} matrix")
        if cols < rows:
            raise SeifertError(f"more rows than columns ({rows} x {cols}); expected n x (n + r), r >= 0")
        object.__setattr__(self, "shape", (rows, cols))

    @property
    def n(self) -> int:
        return self.shape[0]

    @property
    def r(self) -> int:
        return self.shape[1] - self.shape[0]

    @classmethod
    def from_document(cls, doc: Union[str, Mapping[str, Any]]) -> "SeifertPair":
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            shape = doc.get("shape")
            return cls(
                doc["a_plus"],
                doc["a_minus"],
                mu=doc.get("mu"),
                m=doc.get("m"),
                shape=tuple(shape) if shape is not None else None,
            )
        except KeyError as exc:
            raise SeifertError(f"Seifert pair document is missing {exc}") from None
        except (TypeError, ValueError) as exc:
            if isinstance(exc, SeifertError):
                raise
            raise SeifertError(f"malformed Seifert pair: {exc}") from None

    @classmethod
    def load(cls, path: Union[str, Path]) -> "SeifertPair":
        return cls.from_document(Path(path).read_text())

    def to_document(self) -> dict:
        doc: dict[str, Any] = {
            "a_plus": [list(r) for r in self.a_plus],
            "a_minus": [list(r) for r in self.a_minus],
        }
        if self.mu is not None:
            doc["mu"] = self.mu
        if self.m is not None:
            doc["m"] = list(self.m)
        if self.n == 0:
            doc["shape"] = list(self.shape)
        return doc


def presentation_matrix(sp: SeifertPair) -> list[list[LaurentPoly]]:
    """Entrywise ``A+ - t A-`` over Z[t^{+-1}]."""
    t = LaurentPoly.var(1, 1)
    return [
        [LaurentPoly.constant(a, 1) - t * b for a, b in zip(ra, rb)]
        for ra, rb in zip(sp.a_plus, sp.a_minus)
    ]


def delta_from_seifert(sp: SeifertPair) -> UnitClass:
    """Delta_{L(m)} up to units; zero when the matrices are not square."""
    if sp.r > 0:
        return canonicalize(LaurentPoly.zero(1))
    return canonicalize(det(presentation_matrix(sp), LaurentPoly.constant(1, 1)))


def lemma7_extend(
    sp: SeifertPair,
    d_mu: int,
    lower_plus: Optional[Sequence[Sequence[int]]] = None,
    lower_minus: Optional[Sequence[Sequence[int]]] = None,
) -> SeifertPair:
    """Enlarge a square pair by ``d_mu`` disc boundaries: identity block in
    ``A+``, cyclic shift block in ``A-``, zero upper-right blocks and the given
    (default zero) ``d_mu x n`` lower-left blocks."""
    if sp.r != 0:
        raise SeifertError("lemma7_extend needs a square Seifert pair")
    if d_mu < 1:
        raise SeifertError("d_mu must be positive")
    n = sp.n
    lp = _as_matrix(lower_plus) if lower_plus is not None else ((0,) * n,) * d_mu
    lm = _as_matrix(lower_minus) if lower_minus is not None else ((0,) * n,) * d_mu
    for blk in (lp, lm):
        if len(blk) != d_mu or any(len(r) != n for r in blk):
            raise SeifertError(f"lower-left block must be {d_mu} x {n}")
    ident = [[1 if i == j else 0 for j in range(d_mu)] for i in range(d_mu)]
    # ones on the subdiagonal and in the top-right corner
    cyc = [[1 if (i == j + 1) or (i == 0 and j == d_mu - 1) else 0 for j in range(d_mu)] for i in range(d_mu)]
    if d_mu == 1:
        cyc = [[1]]
    ap = [list(r) + [0] * d_mu for r in sp.a_plus] + [list(lp[i]) + ident[i] for i in range(d_mu)]
    am = [list(r) + [0] * d_mu for r in sp.a_minus] + [list(lm[i]) + cyc[i] for i in range(d_mu)]
    return SeifertPair(ap, am, shape=(n + d_mu, n + d_mu))


def lemma7_block_determinant(sp: SeifertPair, d_mu: int, lower_plus=None, lower_minus=None) -> UnitClass:
    """det(A+ - t A-) of the enlarged pair; equals ``(t^d_mu - 1) det(A'+ - t A'-)`` up to units."""
    return delta_from_seifert(lemma7_extend(sp, d_mu, lower_plus, lower_minus))
