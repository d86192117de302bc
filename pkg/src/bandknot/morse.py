"""Build planar diagrams from Morse words (caps, cups, crossings).

The builder sweeps a horizontal line down the page.  Its state is the
ordered list of strand ends crossing the sweep line; each carries a
provisional edge identifier and a flow direction (+1 downward, -1
upward).  Caps create an adjacent pair of opposite directions, cups
cancel one, and crossings swap neighbours.  Edge identifiers that meet
over a cap, a cup, or nothing at all are unified afterwards, which is
also how closed unknotted components fall out.

Diagrams produced this way are planar by construction, and orientations
are fixed by the cap choices rather than inferred, so multi-component
diagrams keep their intended relative orientations.
"""

from __future__ import annotations

from .diagram import PlanarDiagram, DiagramError


class MorseError(DiagramError):
    pass


class MorseBuilder:
    def __init__(self):
        self._handles = []  # list of [edge_id, direction]
        self._fresh = 0
        self._parent = {}
        self._crossings = []  # (ccw_ends, sign) with provisional ids
        self._marks = {}  # name -> (provisional id, provisional id)

    # -- union-find over provisional edge ids -------------------------------

    def _new_id(self):
        self._fresh += 1
        self._parent[self._fresh] = self._fresh
        return self._fresh

    def _find(self, x):
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def _union(self, x, y):
        self._parent[self._find(x)] = self._find(y)

    # -- events --------------------------------------------------------------

    def cap(self, i, rising="left"):
        """Insert a local maximum at position i.

        ``rising='left'`` orients the arc left-to-right over the top, so
        the left side flows up (-1) and the right side down (+1).
        """
        if not 0 <= i <= len(self._handles):
            raise MorseError("cap position %d out of range" % i)
        left, right = self._new_id(), self._new_id()
        self._union(left, right)
        if rising == "left":
            pair = [[left, -1], [right, 1]]
        elif rising == "right":
            pair = [[left, 1], [right, -1]]
        else:
            raise MorseError("rising must be 'left' or 'right'")
        self._handles[i:i] = pair

    def cup(self, i):
        """Join strands i and i+1 at a local minimum."""
        if not 0 <= i < len(self._handles) - 1:
            raise MorseError("cup position %d out of range" % i)
        (e1, d1), (e2, d2) = self._handles[i], self._handles[i + 1]
        if d1 == d2:
            raise MorseError(
                "cup would join two strands flowing the same way")
        self._union(e1, e2)
        del self._handles[i:i + 2]

    def cross(self, i, over="left"):
        """Cross strands i and i+1; ``over`` names the incoming strand
        (by its side) that passes on top."""
        if not 0 <= i < len(self._handles) - 1:
            raise MorseError("crossing position %d out of range" % i)
        (el, dl), (er, dr) = self._handles[i], self._handles[i + 1]
        ea = self._new_id()  # new left end, continues the right strand
        eb = self._new_id()  # new right end, continues the left strand
        # CCW around the crossing: NE, NW, SW, SE.
        ends = [(er, dr == 1), (el, dl == 1), (ea, dr == -1), (eb, dl == -1)]
        if over == "left":
            ccw = ends  # over-strand (el -> eb) sits at odd slots
        elif over == "right":
            ccw = ends[1:] + ends[:1]  # rotate so (er -> ea) is the over pair
        else:
            raise MorseError("over must be 'left' or 'right'")
        self._crossings.append(_canonical_crossing(ccw))
        self._handles[i] = [ea, dr]
        self._handles[i + 1] = [eb, dl]

    def twist(self, i, count, over="left"):
        """count crossings at position i, all of the same handedness."""
        for _ in range(abs(count)):
            self.cross(i, over)

    def mark(self, i, name):
        """Remember the edge pair at positions (i, i+1), e.g. for slots."""
        if not 0 <= i < len(self._handles) - 1:
            raise MorseError("mark position %d out of range" % i)
        self._marks[name] = (self._handles[i][0], self._handles[i + 1][0])

    # -- finish ----------------------------------------------------------------

    def finish(self):
        """Returns the diagram, or (diagram, marks) if marks were set."""
        if self._handles:
            raise MorseError(
                "%d strands left open; close them with cups"
                % len(self._handles))
        crossings = []
        signs = []
        used = set()
        for ends, sign in self._crossings:
            resolved = tuple(self._find(e) for e in ends)
            crossings.append(resolved)
            signs.append(sign)
            used.update(resolved)
        roots = {self._find(x) for x in self._parent}
        unknots = sum(1 for r in roots if r not in used)
        relabel = {}
        out = []
        for c in crossings:
            for e in c:
                if e not in relabel:
                    relabel[e] = len(relabel) + 1
            out.append(tuple(relabel[e] for e in c))
        diagram = PlanarDiagram(out, signs, unknots)
        if not self._marks:
            return diagram
        marks = {}
        for name, (e1, e2) in self._marks.items():
            r1, r2 = self._find(e1), self._find(e2)
            if r1 not in relabel or r2 not in relabel:
                raise MorseError(
                    "marked pair %r vanished into a crossingless loop" % name)
            marks[name] = (relabel[r1], relabel[r2])
        return diagram, marks


def _canonical_crossing(ccw):
    """Rotate a CCW end list so slot 0 is the arriving under-strand.

    ``ccw`` is four (edge, arriving) pairs counterclockwise with the
    over-strand at odd positions.  Returns (tuple, sign).
    """
    unders = [ccw[0], ccw[2]]
    overs = [ccw[1], ccw[3]]
    if sum(arr for _e, arr in unders) != 1 or sum(arr for _e, arr in overs) != 1:
        raise MorseError("strand directions at crossing are inconsistent")
    if ccw[0][1]:
        rotated = ccw
    else:
        rotated = ccw[2:] + ccw[:2]
    sign = 1 if rotated[1][1] else -1
    return tuple(e for e, _arr in rotated), sign
