"""The parametric knot families and their operations.

Three template families ship as data files: the twisted-fusion family
K[n,m], its ribbon companion R[m], and the band-presented family J[m]
with marked annulus curves.  The J templates come in two skeleton
parities (the half twist that flips the orientability of the spanning
surface cannot live in a single twist slot), and in the two band
presentation variants whose induced framings differ.

Alexander polynomials of the K family also exist in closed form; the
acceptance suite checks the diagram route against it exactly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .laurent import LaurentPolynomial
from .diagram import PlanarDiagram, DiagramError
from .template import load_template, instantiate, TemplateError
from .seifert import seifert_matrix
from . import invariants as inv

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


class FamilyError(ValueError):
    pass


def _sym(k):
    return LaurentPolynomial({k: 1}) + LaurentPolynomial({-k: 1})


def closed_form_alexander_K(n, m):
    """The closed-form Alexander polynomial of K[n,m] (n != 0, m >= 0).

    Two branches, one per sign of n; both are symmetric with value 1 at
    t = 1 by construction.  Exponent collisions at small |n| (the generic
    exponents n-2, n-1 meeting 0, 1, 2) accumulate coefficients.
    """
    if n == 0:
        raise FamilyError("no closed form at n = 0")
    if m < 0:
        raise FamilyError("m must be non-negative")
    nu = abs(n)
    out = LaurentPolynomial({0: -(1 + 6 * m)})
    out = out + (2 + 4 * m) * _sym(1) - (1 + m) * _sym(2)
    if n > 0:
        out = out + m * _sym(nu - 2) - (1 + 3 * m) * _sym(nu - 1)
        out = out + (2 + 3 * m) * _sym(nu) - (1 + m) * _sym(nu + 1)
    else:
        out = out - (1 + m) * _sym(nu - 1) + (2 + 3 * m) * _sym(nu)
        out = out - (1 + 3 * m) * _sym(nu + 1) + m * _sym(nu + 2)
    return out


_TEMPLATES = {}


def family_template(name):
    if name not in _TEMPLATES:
        _TEMPLATES[name] = load_template(
            os.path.join(DATA_DIR, name + ".txt"))
    return _TEMPLATES[name]


def knot_K(n, m):
    """The K[n,m] diagram: twist parameter n, band parameter 2m+1."""
    if m < 0:
        raise FamilyError("m must be non-negative")
    t = family_template("knot_k")
    return instantiate(t, _k_params(t, n, m))


def _k_params(template, n, m):
    params = {}
    for slot in template.slots:
        role = template.meta.get("slot." + slot.name, slot.name)
        if role == "twist":
            params[slot.name] = n
        elif role == "twist_opposite":
            params[slot.name] = -n
        elif role == "band":
            params[slot.name] = 2 * m + 1
        else:
            raise TemplateError("unassigned slot %r" % slot.name)
    return params


def knot_R(m):
    """The R[m] diagram; its Alexander polynomial is independent of m."""
    if m < 0:
        raise FamilyError("m must be non-negative")
    t = family_template("knot_r")
    params = {}
    for slot in template_slots_by_role(t, "band"):
        params[slot.name] = 2 * m + 1
    return instantiate(t, params)


def template_slots_by_role(template, role):
    out = []
    for slot in template.slots:
        if template.meta.get("slot." + slot.name, slot.name) == role:
            out.append(slot)
    return out


@dataclass(frozen=True)
class FramedKnot:
    """A knot diagram together with an integer framing."""

    diagram: PlanarDiagram
    framing: int

    def __post_init__(self):
        if self.diagram.component_count() != 1:
            raise FamilyError("framed knots must have one component")


@dataclass
class BandPresentation:
    """A band-presented knot with its marked associated-annulus curves.

    The skeleton template carries three slots: the band twist box and the
    two annulus boxes that realize surgery on the marked curves c1, c2.
    ``epsilon`` and ``orientable`` are declared data of the presentation;
    the induced framing follows from them.
    """

    template: object
    band_value: int
    epsilon: int
    orientable: bool
    variant: str
    m: int
    twist: int = 0

    def induced_framing(self):
        return induced_framing(self)

    def annulus_slots(self):
        pos = template_slots_by_role(self.template, "annulus_positive")
        neg = template_slots_by_role(self.template, "annulus_negative")
        if len(pos) != 1 or len(neg) != 1:
            raise TemplateError("band presentation needs both annulus slots")
        return pos[0], neg[0]

    def diagram(self):
        return self._instantiate(self.twist)

    def _instantiate(self, n):
        pos, neg = self.annulus_slots()
        band = template_slots_by_role(self.template, "band")
        params = {pos.name: n, neg.name: -n}
        for slot in band:
            params[slot.name] = self.band_value
        return instantiate(self.template, params)

    def twisted(self, n):
        """The presentation after n more annulus twists (composition is
        additive in the twist parameter)."""
        return BandPresentation(self.template, self.band_value, self.epsilon,
                                self.orientable, self.variant, self.m,
                                self.twist + n)


def induced_framing(bp):
    """0 for an orientable spanning surface, otherwise -4 * epsilon."""
    if bp.orientable:
        return 0
    return -4 * bp.epsilon


def band_presentation_J(m, variant="left"):
    """The band presentation of J[m] (left or right variant).

    Left variant: epsilon = -1, orientable iff m is odd (framing 0 or +4).
    Right variant: epsilon = +1, orientable iff m is even (framing 0 or -4).
    """
    if variant not in ("left", "right"):
        raise FamilyError("variant must be 'left' or 'right'")
    parity = "odd" if m % 2 else "even"
    t = family_template("knot_j_%s_%s" % (variant, parity))
    band = template_slots_by_role(t, "band")
    if len(band) != 1:
        raise TemplateError("J template needs one band slot")
    if variant == "left":
        epsilon = -1
        orientable = (m % 2 == 1)
    else:
        epsilon = 1
        orientable = (m % 2 == 0)
    value = (m - (1 if m % 2 else 0)) // 2
    return BandPresentation(t, value, epsilon, orientable, variant, m)


def knot_J(m):
    """The knot J[m]: the closure of its band presentation."""
    return band_presentation_J(m, "left").diagram()


def annulus_twist(bp, n):
    """Diagram after n annulus twists: +-n full twists in the two marked
    boxes; n = 0 returns the presented knot itself."""
    return bp.twisted(n).diagram()


def augmented_link(bp):
    """The 3-component link: the knot plus the curves c1, c2 encircling
    the two marked cables."""
    d = bp.diagram()
    pos, neg = bp.annulus_slots()
    out = d
    for slot in (pos, neg):
        out = _encircle(out, slot.edges)
    if out.component_count() != bp.diagram().component_count() + 2:
        raise AssertionError("augmentation did not add two components")
    return out


def _encircle(diagram, pair):
    """Add an unknotted component around the two edges of a slot gap.

    Drawn in the gap's ladder normalization: the circle's moving strand
    passes over both cable strands, turns, and comes back under them,
    closing around the cable in four crossings.
    """
    from .template import _gap_darts, _gap_program
    from .morse import MorseError

    ea, eb = pair
    da, db = _gap_darts(diagram, ea, eb)
    crossings = [list(c) for c in diagram.crossings]
    signs = list(diagram.signs)
    for cap_dirs in ((-1, 1), (1, -1)):
        program = [("cap0", cap_dirs),
                   ("x", 1, "left"), ("x", 2, "left"),
                   ("x", 2, "left"), ("x", 1, "left"),
                   ("cup0",)]
        try:
            trial_c = [list(c) for c in crossings]
            trial_s = list(signs)
            _gap_program(trial_c, trial_s, diagram, ea, eb, da, db, program,
                         max(diagram.edges()) + 1)
            return PlanarDiagram([tuple(c) for c in trial_c], trial_s,
                                 diagram.unknots)
        except MorseError:
            continue
    raise AssertionError("could not orient the encircling component")
