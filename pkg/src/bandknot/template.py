"""Diagram templates: PD skeletons with parametric twist slots.

A slot names a pair of skeleton edges that cobound a face; instantiating
the slot with an integer p replaces the face gap by a twist region on
those two strands: 2|p| crossings for a full-twist slot, |p| for a
half-twist slot, all of one handedness (the slot's for p > 0, the
opposite for p < 0).  Crossing signs then follow from the strand
orientations, so the same slot mechanism serves parallel and
anti-parallel strand pairs.

Templates are shipped as plain-text files: a ``pd:`` line with the
skeleton, ``slot:`` lines, and optional ``meta:`` key/value lines for
family-specific data (marked curves, framing flags, parities).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import PlanarDiagram, DiagramError, parse_pd
from .morse import _canonical_crossing
from .seifert import faces


class TemplateError(DiagramError):
    pass


@dataclass(frozen=True)
class TwistSlot:
    name: str
    kind: str                # 'full' or 'half'
    handedness: str          # 'right' or 'left'
    edges: tuple             # the two skeleton edges spanning the gap
    parity: str = "any"      # 'odd', 'even', or 'any' (half slots only)

    def __post_init__(self):
        if self.kind not in ("full", "half"):
            raise TemplateError("slot kind must be 'full' or 'half'")
        if self.handedness not in ("right", "left"):
            raise TemplateError("slot handedness must be 'right' or 'left'")
        if self.parity not in ("odd", "even", "any"):
            raise TemplateError("slot parity must be odd, even or any")
        if len(self.edges) != 2 or self.edges[0] == self.edges[1]:
            raise TemplateError("slot needs two distinct edges")

    def crossing_count(self, p):
        return 2 * abs(p) if self.kind == "full" else abs(p)

    def check_parameter(self, p):
        if self.kind == "half" and self.parity != "any":
            want = 1 if self.parity == "odd" else 0
            if p % 2 != want:
                raise TemplateError(
                    "slot %r requires an %s parameter, got %d"
                    % (self.name, self.parity, p))


@dataclass
class DiagramTemplate:
    skeleton: PlanarDiagram
    slots: list
    meta: dict = field(default_factory=dict)

    def slot(self, name):
        for s in self.slots:
            if s.name == name:
                return s
        raise TemplateError("unknown slot %r" % name)

    def validate(self):
        edge_set = self.skeleton.edges()
        used = set()
        for s in self.slots:
            for e in s.edges:
                if e not in edge_set:
                    raise TemplateError(
                        "slot %r references missing edge %r" % (s.name, e))
                if e in used:
                    raise TemplateError(
                        "edge %r is claimed by two slots" % (e,))
                used.add(e)
            _gap_darts(self.skeleton, *s.edges)
        return self


def _gap_darts(diagram, ea, eb):
    """The unique face holding both edges, with their face-dart directions.

    Returns (da, db): the directions (+1 with the knot, -1 against) whose
    darts lie on the shared face, which lies to the right of both darts.
    """
    found = []
    for face in faces(diagram):
        das = [d for (e, d) in face if e == ea]
        dbs = [d for (e, d) in face if e == eb]
        for da in das:
            for db in dbs:
                found.append((da, db))
    if not found:
        raise TemplateError(
            "edges %r and %r do not cobound a face" % (ea, eb))
    if len(found) > 1:
        raise TemplateError(
            "gap region for edges %r and %r is ambiguous" % (ea, eb))
    return found[0]


def _gap_program(crossings, signs, diagram, ea, eb, da, db, program,
                 fresh_start):
    """Run a small Morse program inside the gap between edges ea and eb.

    Cutting each edge once inside the shared face leaves four flank
    occurrences whose cyclic order pairs one flank of each edge per
    corridor mouth, so the gap is a vertical corridor: the left column
    enters as ea, the right as eb (flow directions -da and db down the
    corridor), and the program's events run top to bottom between them.

    Events: ("x", i, over) crosses positions i, i+1; ("cap0", (d1, d2))
    inserts a capped pair at the far left; ("cup0",) closes positions
    0, 1.  Exactly the two column strands must survive, and their final
    flow must match the bottom flanks, otherwise MorseError is raised
    (an odd twist count between anti-parallel strands, for instance).
    """
    from .morse import MorseError

    nid = [fresh_start]
    parent = {}

    def fresh():
        parent[nid[0]] = nid[0]
        nid[0] += 1
        return nid[0] - 1

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    dir_a = -da
    dir_b = db
    top_left, top_right = fresh(), fresh()
    handles = [[top_left, dir_a], [top_right, dir_b]]
    pending = []
    for ev in program:
        if ev[0] == "x":
            _, i, over = ev
            if not 0 <= i < len(handles) - 1:
                raise MorseError("gap crossing out of range")
            (el, dl), (er, dr) = handles[i], handles[i + 1]
            na, nb = fresh(), fresh()
            ends = [(er, dr == 1), (el, dl == 1),
                    (na, dr == -1), (nb, dl == -1)]
            ccw = ends if over == "left" else ends[1:] + ends[:1]
            pending.append(_canonical_crossing(ccw))
            handles[i] = [na, dr]
            handles[i + 1] = [nb, dl]
        elif ev[0] == "cap0":
            d1, d2 = ev[1]
            if d1 == d2:
                raise MorseError("cap strands must flow oppositely")
            u, v = fresh(), fresh()
            parent[find(u)] = find(v)
            handles[0:0] = [[u, d1], [v, d2]]
        elif ev[0] == "cup0":
            (e1, d1), (e2, d2) = handles[0], handles[1]
            if d1 == d2:
                raise MorseError("cup strands must flow oppositely")
            parent[find(e1)] = find(e2)
            del handles[0:2]
        else:
            raise MorseError("unknown gap event %r" % (ev[0],))
    if len(handles) != 2:
        raise MorseError("gap program must end with the two columns")
    if handles[0][1] != dir_a or handles[1][1] != dir_b:
        raise MorseError(
            "gap program is orientation-inconsistent with the flanks")
    bottom_left, bottom_right = handles[0][0], handles[1][0]

    a_head = diagram.head(ea)
    a_tail = diagram.tail(ea)
    b_head = diagram.head(eb)
    b_tail = diagram.tail(eb)

    def set_slot(occ, value):
        ci, slot = occ
        crossings[ci][slot] = value

    set_slot(a_head if da == 1 else a_tail, top_left)
    set_slot(a_tail if da == 1 else a_head, bottom_left)
    set_slot(b_tail if db == 1 else b_head, top_right)
    set_slot(b_head if db == 1 else b_tail, bottom_right)
    for ends, sign in pending:
        crossings.append([find(e) for e in ends])
        signs.append(sign)
    # Resolve merged identifiers in the flank slots as well.
    for row in crossings:
        for k, e in enumerate(row):
            row[k] = find(e)
    return nid[0]


def _splice_twists(crossings, signs, diagram, ea, eb, da, db, count,
                   handedness, fresh_start):
    """Insert a twist ladder of ``count`` crossings between ea and eb."""
    over = "left" if handedness == "right" else "right"
    program = [("x", 0, over)] * count
    return _gap_program(crossings, signs, diagram, ea, eb, da, db, program,
                        fresh_start)


def instantiate(template, params):
    """Fill every slot of the template; ``params`` maps slot name -> int.

    Parameter 0 leaves the gap closed by the two parallel strands; the
    crossing count of the result is the skeleton's plus each slot's
    contribution.
    """
    unknown = set(params) - {s.name for s in template.slots}
    if unknown:
        raise TemplateError("unknown slots: %s" % ", ".join(sorted(unknown)))
    missing = {s.name for s in template.slots} - set(params)
    if missing:
        raise TemplateError("missing parameters: %s"
                            % ", ".join(sorted(missing)))
    skeleton = template.skeleton
    crossings = [list(c) for c in skeleton.crossings]
    signs = list(skeleton.signs)
    fresh = max(skeleton.edges(), default=0) + 1
    for s in template.slots:
        p = int(params[s.name])
        s.check_parameter(p)
        if p == 0:
            continue
        count = s.crossing_count(p)
        hand = s.handedness
        if p < 0:
            hand = "left" if hand == "right" else "right"
        da, db = _gap_darts(skeleton, *s.edges)
        fresh = _splice_twists(crossings, signs, skeleton, s.edges[0],
                               s.edges[1], da, db, count, hand, fresh)
    return PlanarDiagram([tuple(c) for c in crossings], signs,
                         skeleton.unknots)


# ---------------------------------------------------------------------------
# Template text format.


def parse_template(text):
    """Parse the template file format.

    Lines: ``pd: <PD text>``, ``slot: name kind handedness parity eA eB``,
    ``meta: key value...``, ``#`` comments.
    """
    skeleton = None
    slots = []
    meta = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        head = head.strip().lower()
        rest = rest.strip()
        if head == "pd":
            if skeleton is not None:
                raise TemplateError("duplicate pd line at %d" % lineno)
            skeleton = parse_pd(rest)
        elif head == "slot":
            parts = rest.split()
            if len(parts) != 6:
                raise TemplateError(
                    "slot line %d needs: name kind hand parity edgeA edgeB"
                    % lineno)
            name, kind, hand, parity, ea, eb = parts
            slots.append(TwistSlot(name, kind, hand,
                                   (int(ea), int(eb)), parity))
        elif head == "meta":
            key, _, value = rest.partition(" ")
            meta[key.strip()] = value.strip()
        else:
            raise TemplateError("unrecognized line %d: %r" % (lineno, raw))
    if skeleton is None:
        raise TemplateError("template has no pd line")
    return DiagramTemplate(skeleton, slots, meta).validate()


def load_template(path):
    with open(path, encoding="utf-8") as fh:
        return parse_template(fh.read())
