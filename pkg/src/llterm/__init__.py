"""llterm: termination analysis for integer linear while-loops.

The library decides, over all integer initial states, termination of loops
`x <- u; while Bx >= c do x <- Ax + a` with diagonalisable update matrix,
by building an exactly evaluable eventual-non-termination witness region
and searching it for integer points. An exact big-integer simulator
cross-validates every verdict at desk scale.
"""

__version__ = "0.1.0"
