"""
Serializable descriptions of ring instances.

Specs are plain data; ``rings.factory.make_instance`` turns them into live
instances and is where well-formedness (primality, identity law...) is
enforced.
"""

from fractions import Fraction
from typing import Annotated, Any, List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .common import CarrierKind, OrderKind, ProductKind


class _Spec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class ScalarRingSpec(_Spec):
    """Big integers or big rationals."""

    kind: Literal["scalar"] = "scalar"
    carrier: CarrierKind = CarrierKind.RATIONALS


class PolynomialRingSpec(_Spec):
    """Univariate polynomials ordered lexicographically or antilexicographically."""

    kind: Literal["polynomial"] = "polynomial"
    base: CarrierKind = CarrierKind.RATIONALS
    order: OrderKind = OrderKind.LEXICOGRAPHIC
    max_degree_guard: int = 64


class PairRingSpec(_Spec):
    """Pairs with a choice of order and product."""

    kind: Literal["pair"] = "pair"
    base: CarrierKind = CarrierKind.RATIONALS
    order: OrderKind = OrderKind.LEXICOGRAPHIC
    product: ProductKind = ProductKind.DUAL


class TruncatedSeriesSpec(_Spec):
    """Rational power series modulo X^precision."""

    kind: Literal["series"] = "series"
    precision: int


class ResidueRingSpec(_Spec):
    """Residues modulo prime**exponent."""

    kind: Literal["residues"] = "residues"
    prime: int
    exponent: int


class StructureConstantAlgebraSpec(_Spec):
    """A rational algebra given by structure constants.

    Attributes:
        rank: Dimension of the algebra
        constants: ``constants[i][j]`` is the coordinate vector of e_i·e_j;
            entries are integers or ``"p/q"`` strings
        unit_index: Basis element acting as 1
        positivity: Cone rule; only the scalar cone is shipped
        name: Name used in reports (``algebra:<name>``)
    """

    kind: Literal["structure"] = "structure"
    rank: int
    constants: List[List[List[str]]]
    unit_index: int = 0
    positivity: Literal["scalar-cone"] = "scalar-cone"
    name: str = "inline"

    @field_validator("constants", mode="before")
    @classmethod
    def stringify_constants(cls, value: Any) -> Any:
        """Accept ints and Fractions as well as strings."""
        if not isinstance(value, (list, tuple)):
            return value
        return [
            [
                [str(c) if isinstance(c, (int, Fraction)) else c for c in vector]
                if isinstance(vector, (list, tuple))
                else vector
                for vector in row
            ]
            if isinstance(row, (list, tuple))
            else row
            for row in value
        ]


RingSpec = Annotated[
    Union[
        ScalarRingSpec,
        PolynomialRingSpec,
        PairRingSpec,
        TruncatedSeriesSpec,
        ResidueRingSpec,
        StructureConstantAlgebraSpec,
    ],
    Field(discriminator="kind"),
]
