"""Recognizing generalized reflections and reading off their canonical data.

A generalized reflection fixes a hyperplane pointwise and scales one direction
by an eigenvalue different from 0 and 1.  Everything below is exact: scalars
are rationals or elements of Q(sqrt(m)), never floats.
"""

from reflext import Matrix, recognize_reflection, fixes_vector
from reflext.errors import NotDiagonalizable, NotRankOne
from reflext.scalars import render_scalar

s1 = Matrix.from_rows([[-1, 1], [0, 1]])
print("candidate matrix:", s1)

data = recognize_reflection(s1)
print("reflection vector alpha =", tuple(render_scalar(x) for x in data.alpha))
print("eigenvalue lambda       =", render_scalar(data.eigenvalue))
print("hyperplane basis        =", data.hyperplane.basis)
print("functional f            =", tuple(render_scalar(x) for x in data.functional))

# The decomposition s(v) = v + f(v) alpha is exact:
v = (5, 3)
image = data.apply(v)
f_v = data.f(v)
print(f"\ns({v}) = {image};  f({v}) = {render_scalar(f_v)}")
assert image == tuple(x + f_v * a for x, a in zip(v, data.alpha))

# Vectors on the hyperplane are fixed; alpha itself is scaled by lambda.
print("fixes (1, 2)?", fixes_vector(data, (1, 2)))
print("fixes alpha? ", fixes_vector(data, data.alpha))

# Not everything with a fixed hyperplane is a reflection:
try:
    recognize_reflection(Matrix.identity(2))
except NotRankOne as exc:
    print("\nidentity rejected:", exc)

try:
    recognize_reflection(Matrix.from_rows([[1, 1], [0, 1]]))
except NotDiagonalizable as exc:
    print("shear rejected:   ", exc)
