"""
Finite-dimensional ℚ-algebras given by a table of structure constants.

Nothing about associativity or commutativity is assumed; these instances
exist so that oriented powers can disagree.
"""

import random
from fractions import Fraction
from typing import Any, Dict, Sequence, Tuple

from ..models.common import CarrierKind, OrderKind
from .base import Element, InvalidSpec, ParseError, RingInstance, WrongArity, render_scalar
from .grammar import ScalarNode
from .scalars import RATIONALS

Vector = Tuple[Fraction, ...]
Table = Tuple[Tuple[Vector, ...], ...]


def _unit_vector(rank: int, index: int) -> Vector:
    return tuple(Fraction(1 if k == index else 0) for k in range(rank))


class StructureConstantAlgebra(RingInstance):
    """ℚ^r with ``e_i · e_j = Σ_k constants[i][j][k] e_k``.

    The positive cone is the scalar cone ``{q·1 : q >= 0}``, which is
    compatible with any bilinear product that has 1 as identity.

    Args:
        rank: Dimension r
        constants: r×r table of coefficient vectors of length r
        unit_index: Index of the basis element acting as 1
        name: Instance name (prefixed with ``algebra:``)

    Raises:
        InvalidSpec: If the table has the wrong shape or e_unit is not a
            two-sided identity on the basis
    """

    carrier = CarrierKind.STRUCTURE
    order_kind = OrderKind.CONE_GENERATED
    associative = False
    commutative = False
    divisible = True

    def __init__(
        self,
        rank: int,
        constants: Sequence[Sequence[Sequence[Any]]],
        unit_index: int = 0,
        name: str = "inline",
    ):
        if rank < 1:
            raise InvalidSpec(f"rank must be positive, got {rank}")
        if not 0 <= unit_index < rank:
            raise InvalidSpec(f"unit index {unit_index} outside basis of rank {rank}")
        self.rank = rank
        self.unit_index = unit_index
        self.constants = self._validate_table(rank, constants)
        super().__init__(f"algebra:{name}")
        self._check_identity()

    @staticmethod
    def _validate_table(rank: int, constants: Sequence[Sequence[Sequence[Any]]]) -> Table:
        if len(constants) != rank or any(len(row) != rank for row in constants):
            raise InvalidSpec(f"structure constants must form a {rank}x{rank} table")
        table = []
        for row in constants:
            vectors = []
            for vector in row:
                if len(vector) != rank:
                    raise InvalidSpec(f"product vectors must have length {rank}")
                try:
                    vectors.append(tuple(RATIONALS.coerce(c) for c in vector))
                except (ValueError, ZeroDivisionError) as e:
                    raise InvalidSpec(f"bad structure constant: {e}")
            table.append(tuple(vectors))
        return tuple(table)

    def _check_identity(self) -> None:
        u = self.unit_index
        for i in range(self.rank):
            expected = _unit_vector(self.rank, i)
            if self.constants[u][i] != expected or self.constants[i][u] != expected:
                raise InvalidSpec(f"e_{u} is not a two-sided identity on e_{i}", self.name)

    @property
    def key(self) -> Tuple[Any, ...]:
        return ("algebra", self.rank, self.unit_index, self.constants)

    def _zero(self) -> Vector:
        return (Fraction(0),) * self.rank

    def _one(self) -> Vector:
        return _unit_vector(self.rank, self.unit_index)

    def _add(self, a: Vector, b: Vector) -> Vector:
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a: Vector) -> Vector:
        return tuple(-x for x in a)

    def _mul(self, a: Vector, b: Vector) -> Vector:
        out = [Fraction(0)] * self.rank
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                for k, c in enumerate(self.constants[i][j]):
                    if c:
                        out[k] += x * y * c
        return tuple(out)

    def _is_nonnegative(self, a: Vector) -> bool:
        u = self.unit_index
        return a[u] >= 0 and all(not c for k, c in enumerate(a) if k != u)

    def _canonical(self, raw: Any) -> Vector:
        vector = tuple(RATIONALS.coerce(c) for c in raw)
        if len(vector) != self.rank:
            raise WrongArity(self.rank, len(vector), self.name)
        return vector

    def _scalar(self, q: Fraction) -> Vector:
        return tuple(Fraction(q) * c for c in self._one())

    def _sample(self, rng: random.Random) -> Vector:
        return tuple(RATIONALS.sample_scalar(rng) for _ in range(self.rank))

    def _from_syntax(self, node: Any) -> Vector:
        if isinstance(node, ScalarNode):
            return self._scalar(RATIONALS.scalar_from_node(node, self.name))
        if node.opener != "{":
            raise ParseError("expected coordinates '{q0,...}'", node.position, self.name)
        if len(node.items) != self.rank:
            raise WrongArity(self.rank, len(node.items), self.name)
        return tuple(RATIONALS.scalar_from_node(item, self.name) for item in node.items)

    def render_payload(self, payload: Vector) -> str:
        return "{" + ",".join(render_scalar(c) for c in payload) + "}"

    def basis(self, index: int) -> Element:
        """The basis element e_index."""
        return self.element(_unit_vector(self.rank, index))


# Basis (1, a, b): a·a = b, a·b = 1, b·a = 0, b·b = 0.
NONASSOC3_CONSTANTS = (
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    ((0, 0, 1), (0, 0, 0), (0, 0, 0)),
)

ALGEBRA_CATALOG: Dict[str, Dict[str, Any]] = {
    "nonassoc3": {"rank": 3, "constants": NONASSOC3_CONSTANTS, "unit_index": 0},
}
