"""Planar diagrams of oriented knots and links (PD codes).

Conventions used throughout the package:

* A crossing is a 4-tuple of edge identifiers listed counterclockwise,
  starting from the incoming under-strand.  The under-strand runs from
  slot 0 to slot 2, the over-strand occupies slots 1 and 3.
* The sign of a crossing is +1 when the over-strand runs from slot 1 to
  slot 3, i.e. when rotating the under-strand direction by 90 degrees
  counterclockwise gives the over-strand direction.  With this choice the
  braid generator sigma_i closes up to a positive crossing, and the
  closure of sigma_1^3 (the right-handed trefoil) has signature -2.
* Zero-crossing unknot components are carried as a plain count.

Edge identifiers are integers; they only need to be distinct, not
consecutive.
"""

from __future__ import annotations

import re


class DiagramError(ValueError):
    """Raised for malformed or inconsistent diagram data."""


class PlanarDiagram:
    """An oriented link diagram given by signed PD crossings."""

    def __init__(self, crossings, signs, unknots=0):
        self.crossings = [tuple(c) for c in crossings]
        self.signs = [int(s) for s in signs]
        self.unknots = int(unknots)
        if len(self.crossings) != len(self.signs):
            raise DiagramError("one sign per crossing required")
        for c in self.crossings:
            if len(c) != 4:
                raise DiagramError("crossing must have four edges: %r" % (c,))
        for s in self.signs:
            if s not in (-1, 1):
                raise DiagramError("crossing signs must be +1 or -1")
        if self.unknots < 0:
            raise DiagramError("unknot count cannot be negative")
        self._occurrences = {}
        for ci, c in enumerate(self.crossings):
            for slot, e in enumerate(c):
                self._occurrences.setdefault(e, []).append((ci, slot))
        self._validate()
        self._heads = {}
        self._tails = {}
        for e, occ in self._occurrences.items():
            for ci, slot in occ:
                if slot in self.arrival_slots(ci):
                    self._heads[e] = (ci, slot)
                else:
                    self._tails[e] = (ci, slot)
        self._components = self._trace_components()

    # -- structure ----------------------------------------------------------

    def arrival_slots(self, ci):
        """Slots where strands run into crossing ci (under-in, over-in)."""
        return (0, 1) if self.signs[ci] > 0 else (0, 3)

    def departure_slots(self, ci):
        return (2, 3) if self.signs[ci] > 0 else (2, 1)

    def _validate(self):
        for e, occ in self._occurrences.items():
            if len(occ) != 2:
                raise DiagramError(
                    "edge %r appears %d times, expected 2" % (e, len(occ)))
        for e, occ in self._occurrences.items():
            kinds = sorted(
                slot in self.arrival_slots(ci) for ci, slot in occ)
            if kinds != [False, True]:
                raise DiagramError(
                    "inconsistent orientation at edge %r" % (e,))

    def head(self, e):
        """(crossing, slot) where edge e arrives."""
        return self._heads[e]

    def tail(self, e):
        return self._tails[e]

    def _trace_components(self):
        components = []
        seen = set()
        for start in sorted(self._occurrences):
            if start in seen:
                continue
            comp = []
            e = start
            while e not in seen:
                seen.add(e)
                comp.append(e)
                ci, slot = self.head(e)
                out_slot = (slot + 2) % 4
                e = self.crossings[ci][out_slot]
            components.append(frozenset(comp))
        return components

    # -- queries -------------------------------------------------------------

    def edges(self):
        return set(self._occurrences)

    def component_count(self):
        return len(self._components) + self.unknots

    def components(self):
        return list(self._components)

    def crossing_count(self):
        return len(self.crossings)

    def writhe(self):
        return sum(self.signs)

    def stats(self):
        return {
            "writhe": self.writhe(),
            "components": self.component_count(),
            "crossings": self.crossing_count(),
        }

    def is_connected(self):
        """True if the underlying 4-valent graph is connected.

        Zero-crossing unknot components always split off, except for the
        plain unknot diagram itself.
        """
        if not self.crossings:
            return self.unknots <= 1
        if self.unknots:
            return False
        reached = {0}
        stack = [0]
        edge_to_crossings = {}
        for ci, c in enumerate(self.crossings):
            for e in c:
                edge_to_crossings.setdefault(e, set()).add(ci)
        while stack:
            ci = stack.pop()
            for e in self.crossings[ci]:
                for cj in edge_to_crossings[e]:
                    if cj not in reached:
                        reached.add(cj)
                        stack.append(cj)
        return len(reached) == len(self.crossings)

    def mirror(self):
        """Reverse all crossings; the writhe negates.

        A positive crossing (a,b,c,d) becomes the negative crossing
        (b,c,d,a): the old over-strand is the new under-strand, entering at
        the old slot 1.
        """
        crossings = []
        signs = []
        for c, s in zip(self.crossings, self.signs):
            a, b, cc, d = c
            if s > 0:
                crossings.append((b, cc, d, a))
                signs.append(-1)
            else:
                crossings.append((d, a, b, cc))
                signs.append(1)
        return PlanarDiagram(crossings, signs, self.unknots)

    def relabeled(self, mapping):
        """Apply an edge-identifier substitution."""
        crossings = [tuple(mapping[e] for e in c) for c in self.crossings]
        return PlanarDiagram(crossings, self.signs, self.unknots)

    # -- equality ------------------------------------------------------------

    def _key(self):
        return (tuple(sorted(zip(self.crossings, self.signs))), self.unknots)

    def __eq__(self, other):
        if not isinstance(other, PlanarDiagram):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "<PlanarDiagram: %d crossings, %d components>" % (
            self.crossing_count(), self.component_count())

    def to_text(self):
        """Serialize to PD notation.

        Crossings whose over-strand lies on a component that never passes
        under anything carry an explicit sign marker, since sign inference
        has no anchor there; all other crossings serialize unsigned.
        """
        free = _free_over_components(self)
        tokens = []
        for c, s in zip(self.crossings, self.signs):
            over_edge = c[1]
            comp = next(k for k in self._components if over_edge in k)
            mark = ("+" if s > 0 else "-") if comp in free else ""
            tokens.append("X%s[%s]" % (mark, ",".join(str(e) for e in c)))
        tokens.extend(["U"] * self.unknots)
        return " ".join(tokens)


def _free_over_components(diagram):
    """Components containing no under-strand, as a set of frozensets."""
    pinned = set()
    for ci, c in enumerate(diagram.crossings):
        for comp in diagram.components():
            if c[0] in comp:
                pinned.add(comp)
    return {comp for comp in diagram.components() if comp not in pinned}


_TOKEN_RE = re.compile(r"X([+-]?)\[([^\]]*)\]|U|\S+")


def parse_pd(text):
    """Parse PD notation into a validated PlanarDiagram.

    Grammar: whitespace-separated tokens ``X[a,b,c,d]`` (edge identifiers
    counterclockwise from the incoming under-strand), optional ``X+[...]`` /
    ``X-[...]`` sign overrides, and ``U`` tokens for zero-crossing unknot
    components.  Signs are inferred from the orientations forced by the
    under-strand convention; overrides resolve components that never pass
    under and must agree with inference everywhere else.
    """
    tuples = []
    overrides = []
    unknots = 0
    pos = 0
    for m in _TOKEN_RE.finditer(text):
        tok = m.group(0)
        pos = m.start()
        if tok == "U":
            unknots += 1
            continue
        if not tok.startswith("X"):
            raise DiagramError("syntax error at position %d: %r" % (pos, tok))
        body = m.group(2)
        if body is None:
            raise DiagramError("syntax error at position %d: %r" % (pos, tok))
        parts = [p.strip() for p in body.split(",")]
        if len(parts) != 4:
            raise DiagramError(
                "crossing at position %d needs 4 edges, got %d"
                % (pos, len(parts)))
        try:
            edges = tuple(int(p) for p in parts)
        except ValueError:
            raise DiagramError(
                "non-integer edge identifier at position %d" % pos) from None
        tuples.append(edges)
        mark = m.group(1)
        overrides.append(1 if mark == "+" else -1 if mark == "-" else 0)

    signs = _infer_signs(tuples, overrides)
    return PlanarDiagram(tuples, signs, unknots)


def _infer_signs(tuples, overrides):
    """Infer crossing signs from the under-strand orientation convention.

    Walks each link component.  Under-strand slots are forced (slot 0
    arrives, slot 2 departs); the walk direction of a component either
    satisfies all of its under-slots or none of them, and in the latter
    case the direction is flipped.  Components that never pass under are
    oriented by the first override they carry, or arbitrarily.
    """
    occurrences = {}
    for ci, c in enumerate(tuples):
        for slot, e in enumerate(c):
            occurrences.setdefault(e, []).append((ci, slot))
    for e, occ in occurrences.items():
        if len(occ) != 2:
            raise DiagramError(
                "edge %r appears %d times, expected 2 "
                "(closure check failed)" % (e, len(occ)))

    def other_occurrence(e, ci, slot):
        occ = occurrences[e]
        if occ[0] == (ci, slot):
            return occ[1]
        return occ[0]

    # Walk "strand positions": an oriented traversal visits each occurrence
    # either as an arrival or a departure.  Starting from an occurrence
    # declared as an arrival, the through-strand leaves at slot+2, and the
    # next arrival is the other occurrence of that outgoing edge.
    n = len(tuples)
    arrival = {}  # (ci, slot) -> True/False
    comp_of = {}  # (ci, slot) -> component id
    comp_members = []

    def walk(start_ci, start_slot, comp_id):
        ci, slot = start_ci, start_slot
        while (ci, slot) not in arrival:
            arrival[(ci, slot)] = True
            comp_of[(ci, slot)] = comp_id
            out_slot = (slot + 2) % 4
            arrival[(ci, out_slot)] = False
            comp_of[(ci, out_slot)] = comp_id
            e = tuples[ci][out_slot]
            ci, slot = other_occurrence(e, ci, out_slot)

    comp_id = 0
    for ci in range(n):
        for slot in range(4):
            if (ci, slot) in arrival:
                continue
            walk(ci, slot, comp_id)
            comp_members.append(
                [key for key, v in comp_of.items() if v == comp_id])
            comp_id += 1

    # Decide a direction per component: +1 keeps the walk as traced, -1
    # reverses it (arrival <-> departure for every occurrence).
    direction = {}
    for cid in range(comp_id):
        votes = set()
        for (ci, slot) in comp_members[cid]:
            if slot == 0:
                votes.add(1 if arrival[(ci, slot)] else -1)
            elif slot == 2:
                votes.add(-1 if arrival[(ci, slot)] else 1)
        if len(votes) > 1:
            raise DiagramError("inconsistent orientation in PD code")
        direction[cid] = votes.pop() if votes else 0

    # Resolve free components (no under-strand) by overrides if available.
    for ci, ov in enumerate(overrides):
        if ov == 0:
            continue
        cid = comp_of[(ci, 1)]
        if direction[cid] == 0:
            # Positive sign means the over-strand arrives at slot 1.
            wants_arrival_at_1 = (ov == 1)
            direction[cid] = (
                1 if arrival[(ci, 1)] == wants_arrival_at_1 else -1)
    for cid in range(comp_id):
        if direction[cid] == 0:
            direction[cid] = 1

    signs = []
    for ci in range(n):
        arr1 = arrival[(ci, 1)]
        if direction[comp_of[(ci, 1)]] < 0:
            arr1 = not arr1
        signs.append(1 if arr1 else -1)
    for ci, ov in enumerate(overrides):
        if ov and ov != signs[ci]:
            raise DiagramError(
                "sign override on crossing %d contradicts orientations" % ci)
    return signs


def braid_closure(braid):
    """The closure of a braid word as a PlanarDiagram.

    The crossing count equals the word length, and the component count
    equals the number of cycles of the underlying permutation.  Strands
    untouched by any letter close up into zero-crossing unknot components.
    """
    from .braid import BraidWord

    if not isinstance(braid, BraidWord):
        raise TypeError("braid_closure expects a BraidWord")
    s = braid.strand_count
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    next_id = [0]

    def fresh():
        next_id[0] += 1
        return next_id[0]

    current = [fresh() for _ in range(s)]
    initial = list(current)
    touched = [False] * s
    crossings = []
    signs = []
    for letter in braid.letters:
        i = abs(letter) - 1
        left, right = current[i], current[i + 1]
        new_left, new_right = fresh(), fresh()
        if letter > 0:
            # Left strand passes over; with all strands oriented downward
            # the canonical tuple starts at the incoming under-strand (the
            # old right edge, at the crossing's upper right).
            crossings.append((right, left, new_left, new_right))
            signs.append(1)
        else:
            crossings.append((left, new_left, new_right, right))
            signs.append(-1)
        current[i], current[i + 1] = new_left, new_right
        touched[i] = touched[i + 1] = True
    unknots = 0
    for p in range(s):
        if touched[p]:
            union(current[p], initial[p])
        else:
            unknots += 1
    relabel = {}
    crossings2 = []
    for c in crossings:
        crossings2.append(tuple(find(e) for e in c))
    # Renumber edges 1..2n in first-seen order for tidy output.
    for c in crossings2:
        for e in c:
            if e not in relabel:
                relabel[e] = len(relabel) + 1
    crossings3 = [tuple(relabel[e] for e in c) for c in crossings2]
    return PlanarDiagram(crossings3, signs, unknots)
