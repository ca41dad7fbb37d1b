"""Matrices transcribed by hand from the printed examples.

Kept as text in their printed (unreduced) layout so a transcription
slip shows up as a failing golden or identity test instead of being
silently normalized away.
"""

from .matrix import RingMatrix

A1_TEXT = "x - i*y, -2*z; -1/2*z, -x - i*y"

A2_TEXT = "(x - i*y)^2, -4*z; 1/4*z*(z^2 - 2), -(x + i*y)^2"

C_TEXT = (
    "1/2*y*(x + i*y) + i/4*z^2, i*z, x; "
    "-1/2*x*(x + i*y) - 1/4*z^2, z, y; "
    "1/4*z*(y - i*x), -(y + i*x), z"
)

C_BAR_TEXT = (
    "1/2*y*(x - i*y) - i/4*z^2, -i*z, x; "
    "-1/2*x*(x - i*y) - 1/4*z^2, z, y; "
    "1/4*z*(y + i*x), -(y - i*x), z"
)


def printed_A1() -> RingMatrix:
    return RingMatrix.parse(A1_TEXT)


def printed_A2() -> RingMatrix:
    return RingMatrix.parse(A2_TEXT)


def printed_C() -> RingMatrix:
    return RingMatrix.parse(C_TEXT)


def printed_C_bar() -> RingMatrix:
    return RingMatrix.parse(C_BAR_TEXT)
