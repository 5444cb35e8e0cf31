"""Oriented, ordered link diagrams: PD input, braid closures, linking numbers
and Wirtinger presentations.

A crossing records four edge labels and an explicit sign.  Two labelling
styles are accepted and may be mixed:

* *edge* style (ordinary PD codes): ``over_in != over_out``, every label is
  the segment between two consecutive crossings;
* *arc* style: ``over_in == over_out``, labels are Wirtinger arcs running
  from one undercrossing to the next.

Edges joined through an overpass belong to the same Wirtinger arc.  With
sign ``+1`` the Wirtinger relation reads ``under_out = over * under_in * over^-1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping, Optional, Sequence, Union


class DiagramError(ValueError):
    """Invalid or inconsistent diagram input."""


@dataclass(frozen=True)
class Crossing:
    under_in: int
    over_in: int
    under_out: int
    over_out: int
    sign: int

    def __post_init__(self):
        for name in ("under_in", "over_in", "under_out", "over_out"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
                raise DiagramError(f"{name}={v!r} is not a positive integer label")
        if self.sign not in (1, -1):
            raise DiagramError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.under_in == self.under_out:
            raise DiagramError(f"under_in and under_out are both {self.under_in}")

    @property
    def labels(self) -> tuple[int, int, int, int]:
        return (self.under_in, self.over_in, self.under_out, self.over_out)

    def to_dict(self) -> dict:
        return {
            "under_in": self.under_in,
            "over_in": self.over_in,
            "under_out": self.under_out,
            "over_out": self.over_out,
            "sign": self.sign,
        }


@dataclass(frozen=True, eq=False)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    num_components: int
    arc_component: Mapping[int, int]
    free_components: tuple[int, ...] = ()

    @property
    def labels(self) -> list[int]:
        return sorted(self.arc_component)

    def wirtinger_arcs(self) -> tuple[dict[int, int], list[int]]:
        """Map each label to a 1-based generator index; return it with the
        component of every generator (free components last)."""
        parent = {lab: lab for lab in self.arc_component}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.crossings:
            a, b = find(c.over_in), find(c.over_out)
            if a != b:
                parent[max(a, b)] = min(a, b)
        roots = sorted({find(lab) for lab in parent})
        index = {r: i + 1 for i, r in enumerate(roots)}
        gen_of = {lab: index[find(lab)] for lab in parent}
        comps = [self.arc_component[r] for r in roots]
        comps.extend(self.free_components)
        return gen_of, comps

    def to_document(self) -> dict:
        return {
            "components": self.num_components,
            "crossings": [c.to_dict() for c in self.crossings],
            "free_components": list(self.free_components),
            "component_of_arc": {str(k): v for k, v in sorted(self.arc_component.items())},
        }


@dataclass(frozen=True)
class LinkingMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        e = tuple(tuple(int(x) for x in row) for row in self.entries)
        n = len(e)
        for i in range(n):
            if len(e[i]) != n:
                raise ValueError("linking matrix must be square")
            if e[i][i] != 0:
                raise ValueError("linking matrix must have zero diagonal")
            for j in range(n):
                if e[i][j] != e[j][i]:
                    raise ValueError("linking matrix must be symmetric")
        object.__setattr__(self, "entries", e)

    @property
    def mu(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """1-based access: ``lk[i, j]``."""
        i, j = ij
        return self.entries[i - 1][j - 1]

    def restrict(self, keep: Sequence[int]) -> "LinkingMatrix":
        """Sub-matrix on the components ``keep`` (1-based), in that order."""
        return LinkingMatrix(tuple(tuple(self[i, j] for j in keep) for i in keep))

    def reverse(self, i: int) -> "LinkingMatrix":
        """Linking matrix after reversing the orientation of component ``i``."""
        n = self.mu
        return LinkingMatrix(
            tuple(
                tuple(-self[a, b] if (a == i) != (b == i) else self[a, b] for b in range(1, n + 1))
                for a in range(1, n + 1)
            )
        )

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class GroupPresentation:
    num_generators: int
    relators: tuple[tuple[int, ...], ...]
    generator_component: tuple[int, ...]

    def __post_init__(self):
        if len(self.generator_component) != self.num_generators:
            raise ValueError("generator_component must cover every generator")
        for r in self.relators:
            for g in r:
                if g == 0 or abs(g) > self.num_generators:
                    raise ValueError(f"generator index {g} out of range")

    def exponent_sums(self, relator: Sequence[int], mu: int) -> list[int]:
        """Per-component exponent sum of a word (its image in H_1)."""
        out = [0] * mu
        for g in relator:
            out[self.generator_component[abs(g) - 1] - 1] += 1 if g > 0 else -1
        return out


# ---------------------------------------------------------------------------
# parsing


def parse_pd(document: Union[str, Mapping[str, Any]]) -> LinkDiagram:
    """Build a validated :class:`LinkDiagram` from the PD JSON document."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"malformed JSON: {exc}") from None
    if not isinstance(document, Mapping):
        raise DiagramError("PD document must be a JSON object")
    mu = document.get("components")
    if not isinstance(mu, int) or isinstance(mu, bool) or mu < 1:
        raise DiagramError(f"'components' must be a positive integer, got {mu!r}")
    raw = document.get("crossings", [])
    if not isinstance(raw, list):
        raise DiagramError("'crossings' must be a list")
    crossings = []
    for idx, item in enumerate(raw, start=1):
        if not isinstance(item, Mapping):
            raise DiagramError(f"crossing {idx}: expected an object")
        missing = [k for k in ("under_in", "over_in", "under_out", "over_out", "sign") if k not in item]
        if missing:
            raise DiagramError(f"crossing {idx}: missing {', '.join(missing)}")
        try:
            crossings.append(
                Crossing(item["under_in"], item["over_in"], item["under_out"], item["over_out"], item["sign"])
            )
        except DiagramError as exc:
            raise DiagramError(f"crossing {idx}: {exc}") from None
    free = document.get("free_components", []) or []
    if not isinstance(free, list) or not all(isinstance(x, int) for x in free):
        raise DiagramError("'free_components' must be a list of component indices")
    if len(set(free)) != len(free):
        raise DiagramError("'free_components' lists a component twice")
    for f in free:
        if not 1 <= f <= mu:
            raise DiagramError(f"free component {f} out of range 1..{mu}")
    explicit = document.get("component_of_arc")
    if explicit is not None:
        try:
            explicit = {int(k): int(v) for k, v in explicit.items()}
        except (AttributeError, TypeError, ValueError):
            raise DiagramError("'component_of_arc' must map arc labels to component indices") from None
    return _build(tuple(crossings), mu, tuple(free), explicit)


def _build(
    crossings: tuple[Crossing, ...],
    mu: int,
    free: tuple[int, ...],
    explicit: Optional[dict[int, int]],
) -> LinkDiagram:
    succ: dict[int, int] = {}
    pred: dict[int, int] = {}
    where: dict[int, int] = {}

    def link(a: int, b: int, idx: int):
        if a in succ:
            raise DiagramError(f"arc {a} ends at two crossings ({where[a]} and {idx})")
        if b in pred:
            raise DiagramError(f"arc {b} starts at two crossings (second at crossing {idx})")
        succ[a] = b
        pred[b] = a
        where[a] = idx

    labels: set[int] = set()
    over_only_candidates: set[int] = set()
    for idx, c in enumerate(crossings, start=1):
        labels.update(c.labels)
        link(c.under_in, c.under_out, idx)
        if c.over_in != c.over_out:
            link(c.over_in, c.over_out, idx)
        else:
            over_only_candidates.add(c.over_in)

    cycles: list[list[int]] = []
    seen: set[int] = set()
    for lab in sorted(labels):
        if lab in seen:
            continue
        has_s, has_p = lab in succ, lab in pred
        if has_s != has_p:
            side = "end" if not has_s else "start"
            raise DiagramError(f"arc {lab} is dangling: it has no {side}")
        if not has_s:
            if lab not in over_only_candidates:
                raise DiagramError(f"arc {lab} is dangling")
            cycles.append([lab])
            seen.add(lab)
            continue
        cyc = [lab]
        seen.add(lab)
        nxt = succ[lab]
        while nxt != lab:
            if nxt in seen:
                raise DiagramError(f"arc {nxt} is reached twice while tracing a component")
            cyc.append(nxt)
            seen.add(nxt)
            if nxt not in succ:
                raise DiagramError(f"arc {nxt} is dangling: it has no end")
            nxt = succ[nxt]
        cycles.append(cyc)

    if len(cycles) + len(free) != mu:
        raise DiagramError(
            f"declared {mu} components but found {len(cycles)} traced and {len(free)} free"
        )

    arc_component: dict[int, int] = {}
    if explicit is not None:
        extra = set(explicit) - labels
        if extra:
            raise DiagramError(f"component_of_arc names unknown arc(s) {sorted(extra)}")
        used = set(free)
        for cyc in cycles:
            vals = {explicit[lab] for lab in cyc if lab in explicit}
            if len(vals) != 1:
                raise DiagramError(
                    f"component through arc {cyc[0]} has inconsistent or missing component_of_arc"
                )
            comp = vals.pop()
            if not 1 <= comp <= mu or comp in used:
                raise DiagramError(f"component index {comp} (arc {cyc[0]}) is invalid or reused")
            used.add(comp)
            for lab in cyc:
                arc_component[lab] = comp
    else:
        remaining = [i for i in range(1, mu + 1) if i not in free]
        for comp, cyc in zip(remaining, sorted(cycles, key=min)):
            for lab in cyc:
                arc_component[lab] = comp

    return LinkDiagram(crossings, mu, arc_component, tuple(sorted(free)))


def load_diagram(document: Union[str, Mapping[str, Any]]) -> LinkDiagram:
    """Accept either a PD document or a braid document ``{"strands", "word"}``."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"malformed JSON: {exc}") from None
    if isinstance(document, Mapping) and "word" in document:
        strands = document.get("strands")
        word = document.get("word")
        if not isinstance(strands, int) or not isinstance(word, list):
            raise DiagramError("braid document needs integer 'strands' and list 'word'")
        return braid_closure(word, strands)
    return parse_pd(document)


# ---------------------------------------------------------------------------
# braids


def braid_permutation(word: Sequence[int], strands: int) -> list[int]:
    """``perm[p]`` is the bottom position of the strand starting at top position ``p``."""
    at = list(range(strands))  # at[position] = strand
    for letter in word:
        k = abs(letter)
        at[k - 1], at[k] = at[k], at[k - 1]
    perm = [0] * strands
    for pos, s in enumerate(at):
        perm[s] = pos
    return perm


def braid_components(word: Sequence[int], strands: int) -> list[int]:
    """Component (1-based, ordered by smallest strand) of each strand."""
    perm = braid_permutation(word, strands)
    comp = [0] * strands
    c = 0
    for p in range(strands):
        if comp[p]:
            continue
        c += 1
        q = p
        while not comp[q]:
            comp[q] = c
            q = perm[q]
    return comp


def braid_closure(word: Sequence[int], strands: int) -> LinkDiagram:
    """Closure of a braid word; letter ``k`` is sigma_k, ``-k`` its inverse.

    A positive letter is a positive crossing: the strand at position ``k+1``
    passes over to position ``k``.
    """
    if not isinstance(strands, int) or strands < 1:
        raise DiagramError(f"strands must be a positive integer, got {strands!r}")
    for letter in word:
        if not isinstance(letter, int) or letter == 0 or abs(letter) > strands - 1:
            raise DiagramError(f"braid letter {letter!r} out of range for {strands} strands")

    pos_label = list(range(1, strands + 1))
    strand_at = list(range(strands))
    label_strand = {i + 1: i for i in range(strands)}
    nxt = strands + 1
    raw: list[tuple[int, int, int, int, int]] = []
    for letter in word:
        i, j = abs(letter) - 1, abs(letter)
        a, b = nxt, nxt + 1  # new labels leaving positions i and j
        nxt += 2
        label_strand[a] = strand_at[j]
        label_strand[b] = strand_at[i]
        if letter > 0:
            # over: j -> i, under: i -> j
            raw.append((pos_label[i], pos_label[j], b, a, 1))
        else:
            # over: i -> j, under: j -> i
            raw.append((pos_label[j], pos_label[i], a, b, -1))
        pos_label[i], pos_label[j] = a, b
        strand_at[i], strand_at[j] = strand_at[j], strand_at[i]

    # closing: the edge at bottom position p continues into the top edge p + 1
    parent = {lab: lab for lab in label_strand}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in range(strands):
        x, y = find(pos_label[p]), find(p + 1)
        if x != y:
            parent[max(x, y)] = min(x, y)

    comps = braid_components(word, strands)
    used_roots = sorted({find(lab) for c in raw for lab in c[:4]})
    renum = {r: n + 1 for n, r in enumerate(used_roots)}
    crossings = [
        {
            "under_in": renum[find(ui)],
            "over_in": renum[find(oi)],
            "under_out": renum[find(uo)],
            "over_out": renum[find(oo)],
            "sign": s,
        }
        for ui, oi, uo, oo, s in raw
    ]
    comp_of = {str(renum[r]): comps[label_strand[r]] for r in used_roots}
    mu = max(comps) if comps else 0
    touched = set(comp_of.values())
    free = [c for c in range(1, mu + 1) if c not in touched]
    return parse_pd(
        {"components": mu, "crossings": crossings, "free_components": free, "component_of_arc": comp_of}
    )


# ---------------------------------------------------------------------------
# derived data


def sublink(d: LinkDiagram, keep: Sequence[int]) -> LinkDiagram:
    """The sublink on components ``keep`` (1-based); new component ``i`` is ``keep[i-1]``."""
    keep = list(keep)
    if not keep or len(set(keep)) != len(keep) or not all(1 <= k <= d.num_components for k in keep):
        raise ValueError(f"invalid component selection {keep}")
    new_index = {old: i + 1 for i, old in enumerate(keep)}
    parent = {lab: lab for lab in d.arc_component}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        a, b = find(a), find(b)
        if a != b:
            parent[max(a, b)] = min(a, b)

    kept = []
    for c in d.crossings:
        cu = d.arc_component[c.under_in]
        co = d.arc_component[c.over_in]
        if cu in new_index and co in new_index:
            kept.append(c)
        elif cu in new_index:
            union(c.under_in, c.under_out)
        elif co in new_index:
            union(c.over_in, c.over_out)
    crossings = [
        {
            "under_in": find(c.under_in),
            "over_in": find(c.over_in),
            "under_out": find(c.under_out),
            "over_out": find(c.over_out),
            "sign": c.sign,
        }
        for c in kept
    ]
    comp_of = {}
    for c in crossings:
        for key in ("under_in", "over_in", "under_out", "over_out"):
            comp_of[str(c[key])] = new_index[d.arc_component[c[key]]]
    touched = set(comp_of.values())
    free = [i for i in range(1, len(keep) + 1) if i not in touched]
    return parse_pd(
        {"components": len(keep), "crossings": crossings, "free_components": free, "component_of_arc": comp_of}
    )


def linking_matrix(d: LinkDiagram) -> LinkingMatrix:
    mu = d.num_components
    twice = [[0] * mu for _ in range(mu)]
    for c in d.crossings:
        i = d.arc_component[c.under_in] - 1
        j = d.arc_component[c.over_in] - 1
        if i != j:
            twice[i][j] += c.sign
            twice[j][i] += c.sign
    for i in range(mu):
        for j in range(mu):
            if twice[i][j] % 2:
                raise DiagramError(
                    f"odd crossing-sign sum between components {i + 1} and {j + 1}; diagram is invalid"
                )
    return LinkingMatrix(tuple(tuple(x // 2 for x in row) for row in twice))


def wirtinger(d: LinkDiagram) -> GroupPresentation:
    """One generator per Wirtinger arc (plus one per free component), one
    relator ``v o^e u^-1 o^-e`` per crossing."""
    gen_of, comps = d.wirtinger_arcs()
    relators = []
    for c in d.crossings:
        u, o, v = gen_of[c.under_in], gen_of[c.over_in], gen_of[c.under_out]
        e = c.sign
        relators.append((v, e * o, -u, -e * o))
    return GroupPresentation(len(comps), tuple(relators), tuple(comps))
