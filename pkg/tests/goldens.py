"""Hand-checked reference objects shared by the test modules."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from ruledmotion.lines import PluckerLine, validate_line_poly
from ruledmotion.polynomial import Poly, parse_poly
from ruledmotion.quaternion import MotionPoly, QuatPoly

DATA = Path(__file__).parent / "data"

t = Poly.t()
one_plus_t2 = 1 + t * t


def pp(text: str) -> Poly:
    return parse_poly(text)


# a degree-six line polynomial with real content t^2-6t+10 in its primal part
CONTENT = pp("t^2-6t+10")
SEXTIC_LINE = validate_line_poly(
    QuatPoly(0, pp("2t^3-4t^2+2t-14") * CONTENT, -pp("2t^3-6t^2+4t+8") * CONTENT, pp("t^4+t^2+14t-8") * CONTENT),
    QuatPoly(0, pp("112t"), pp("t^6-51t^2+42t-104"), pp("2t^5-6t^4+2t^3-14t^2-4t+104")),
)
SEXTIC_PRIMAL = QuatPoly(pp("t^2+1"), pp("t-2"), pp("t-3"), pp("t+2"))
BEZOUT_A = Fraction(1, 5)
BEZOUT_B = -pp("t-2") * Fraction(1, 5)
RAW_DUAL = QuatPoly(
    -pp("t^5-3t^4+t^3-7t^2-2t+52") * Fraction(1, 10),
    pp("t^5-3t^4+21t^3-27t^2-22t-208") * Fraction(1, 10),
    -pp("t^5-7t^4+21t^3-11t^2+34t-52") * Fraction(1, 10),
    pp("t^5-3t^4+t^3-7t^2-2t+52") * pp("t-2") * Fraction(1, 10),
)
LAMBDA = -pp("t^4-5t^3+11t^2-29t+56") * Fraction(1, 10)
RHO = Poly([6])
QUARTIC_MOTION = MotionPoly(
    SEXTIC_PRIMAL * CONTENT,
    QuatPoly(
        12,
        pp("t^4-t^3+7t^2-33t-8"),
        -pp("8t^2-16t+12"),
        -pp("t^4-5t^3+11t^2-17t+32"),
    )
    * Fraction(1, 2),
)

# right factor with norm t^2+1 in a k-leading normal form, and a translation factor
REVOLUTE_FACTOR = MotionPoly(QuatPoly(1, 0, 0, t), QuatPoly(t, 0, 0, -1))
REVOLUTE_LEAD = ((0, 0, 0, 1), (1, 0, 0, 0))
TRANSLATION_FACTOR = MotionPoly(QuatPoly(one_plus_t2), QuatPoly(0, 0, 0, 1))
REVOLUTE_EXTENDED = QUARTIC_MOTION * REVOLUTE_FACTOR
TRANSLATION_EXTENDED = QUARTIC_MOTION * TRANSLATION_FACTOR

# a line polynomial with primal content (t^2+1)(t-1)^2(t-2)
SATURATION_CONTENT = one_plus_t2 * pp("t-1") ** 2 * pp("t-2")
SATURATION_FACTOR = pp("t-2")

# the cylindroid, a variant with the k and i axes exchanged, and a
# parametrization whose norm is not a square
CYLINDROID = validate_line_poly(
    QuatPoly(0, 1 - t * t, 2 * t, 0) * one_plus_t2**2,
    QuatPoly(0, -8 * t * t * (1 - t * t), 4 * t * (1 - t * t) ** 2, 0),
)
CYLINDROID_SWAPPED = validate_line_poly(
    QuatPoly(0, 0, 2 * t, 1 - t * t) * one_plus_t2**2,
    QuatPoly(0, 0, 4 * t * (1 - t * t) ** 2, -8 * t * t * (1 - t * t)),
)
CYLINDROID_MOTION = MotionPoly(
    QuatPoly(0, 0, -t, -1) * one_plus_t2**2,
    QuatPoly(0, 0, -1, t) * (2 * t * (t * t - 1)),
)
NONKINEMATIC = validate_line_poly(
    QuatPoly(0, t * one_plus_t2, one_plus_t2, 0),
    QuatPoly(0, -2 * t, 2 * t * t, 0),
)
K_LINE = validate_line_poly(QuatPoly.unit("k"), QuatPoly.zero())

# three lines interpolated by a degree-two motion and reference values
THREE_LINES = (
    PluckerLine((-0.5692893982, 0.1879452202, 0.8003662757), (2.394938124, -1.698415049, 2.102314808), tol=1e-6),
    PluckerLine((-0.9543899389, 0.1373020929, 0.2651188032), (0.8624265591, 1.131167268, 2.518793799), tol=1e-6),
    PluckerLine((-0.9834592139, -0.04634208347, -0.1751010735), (-0.4177553080, 2.772307919, 1.612615937), tol=1e-6),
)
PREIMAGES = (
    (0.0, -0.3000113351, 0.09904575183, 0.9487798153),
    (0.0, -0.5999916401, 0.08631703309, 0.7953360307),
    (0.0, -0.7656688635, -0.03607947323, 0.6422222851),
)
# ascending coefficients (w, i, j, k)
BENNETT_DUAL = (
    (-10.49908633, 0.0, 7.295181813, -0.7917388696),
    (2.837641695, -0.4807564566, 1.302422976, -0.0368980596),
    (-0.9525313145, -0.4263398024, -0.521506355, 0.2008885718),
)
BENNETT_LEAD = (
    (0.0, 0.0671515410, -0.05483389380, 0.0001650193),
    (-0.9525313145, -0.4263398024, -0.5215063550, 0.2008885718),
)
BENNETT_H1 = ((3.437729498, 0.4245869672, -0.6826178148, -1.925681116), (0.0, -39.06204587, -23.42489306, -0.3089744570))
BENNETT_H2 = ((-1.847095642, 0.6951435567, 2.046951289, -0.3765517306), (0.0, 47.58933550, -20.43787422, -23.24757084))
BENNETT_K1 = ((-1.847095642, 1.867767136, 1.089422750, -0.3736701032), (0.0, 23.23952734, -50.18964901, -30.16489659))
BENNETT_K2 = ((3.437729498, -0.7480366121, 0.2749107239, -1.928562744), (0.0, -14.71223772, 6.326881730, 6.608351290))

SATURATION_LINE = validate_line_poly(
    QuatPoly(0, pp("-2t^3+8t^2+8t"), pp("2t^3+8t^2-8t"), pp("t^4+2t^2-8")) * SATURATION_CONTENT,
    QuatPoly.zero(),
)
SATURATION_Q = QuatPoly(t * t, -(t + 2), -(t - 2), -2 * t)
