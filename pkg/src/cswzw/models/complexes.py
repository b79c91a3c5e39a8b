from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Optional, Tuple

from cswzw.models.form import Form
from cswzw.models.spaces import SpaceKind


class ComplexTag(Enum):
    F_M = 'F_M'                    # Omega(M)[1]
    F_BD = 'F_bd'                  # Omega(dM)[1]
    L = 'L'                        # chiral boundary condition inside F_bd
    F_L_M = 'F_L_M'                # boundary-conditioned bulk fields
    LIN_OBS = 'LinObs'             # compactly supported conditioned fields, shifted once more
    B_OBS = 'B_obs'                # base observables, 0-forms vanish on the boundary
    CHIRAL_BOSON = 'ChiralBoson'   # compactly supported functions on the boundary circle


@dataclass(frozen=True)
class ComplexRules:
    # Static data fixed by a tag
    shift: int
    space_kinds: Tuple[SpaceKind, ...]
    compact: bool
    conditioned: bool = False  # bulk boundary condition through the boundary restriction
    chiral: bool = False       # boundary complex carrying the chiral condition itself
    vanish_on_boundary: bool = False
    degrees: Optional[Tuple[int, ...]] = None  # allowed de Rham degrees, None: all
    has_differential: bool = True


COMPLEX_RULES: Dict[ComplexTag, ComplexRules] = {
    ComplexTag.F_M: ComplexRules(1, (SpaceKind.BULK,), compact=False),
    ComplexTag.F_BD: ComplexRules(1, (SpaceKind.BOUNDARY,), compact=False),
    ComplexTag.L: ComplexRules(1, (SpaceKind.BOUNDARY,), compact=False, chiral=True),
    ComplexTag.F_L_M: ComplexRules(1, (SpaceKind.BULK,), compact=False, conditioned=True),
    ComplexTag.LIN_OBS: ComplexRules(2, (SpaceKind.BULK,), compact=True, conditioned=True),
    ComplexTag.B_OBS: ComplexRules(1, (SpaceKind.BASE, SpaceKind.TUBULAR), compact=True,
                                   vanish_on_boundary=True),
    ComplexTag.CHIRAL_BOSON: ComplexRules(0, (SpaceKind.BOUNDARY_CIRCLE,), compact=True,
                                          degrees=(0,), has_differential=False),
}


@dataclass(frozen=True)
class ComplexId:
    tag: ComplexTag
    space_kind: SpaceKind
    region: Optional[object] = None

    def __post_init__(self):
        if self.space_kind not in self.rules.space_kinds:
            raise ValueError(f"{self.tag.value} does not live on {self.space_kind.value}")

    @classmethod
    def of(cls, tag: ComplexTag, region=None, space_kind: SpaceKind = None) -> 'ComplexId':
        return cls(tag, space_kind or COMPLEX_RULES[tag].space_kinds[0], region)

    @property
    def rules(self) -> ComplexRules:
        return COMPLEX_RULES[self.tag]

    @property
    def shift(self) -> int:
        return self.rules.shift

    @property
    def label(self) -> str:
        return self.tag.value if self.region is None else f"{self.tag.value}(V)"


@dataclass(frozen=True)
class HomCochain:
    """
    A linear operator of fixed cohomological degree between complexes.
    Composition adds degrees; sums require equal degrees.
    """
    name: str
    degree: int
    action: Callable[[Form], Form] = field(compare=False)
    source: Optional[ComplexId] = None
    target: Optional[ComplexId] = None

    def __call__(self, form: Form) -> Form:
        return self.action(form)

    @classmethod
    def identity(cls, complex_id: ComplexId = None) -> 'HomCochain':
        return cls('id', 0, lambda form: form, complex_id, complex_id)

    def compose(self, inner: 'HomCochain') -> 'HomCochain':
        """self after inner."""
        outer = self
        return HomCochain(f"{outer.name}.{inner.name}", outer.degree + inner.degree,
                          lambda form: outer(inner(form)), inner.source, outer.target)

    def __add__(self, other: 'HomCochain') -> 'HomCochain':
        if self.degree != other.degree:
            raise ValueError(f"cannot add operators of degrees {self.degree} and {other.degree}")
        first, second = self, other
        return HomCochain(f"({first.name}+{second.name})", self.degree,
                          lambda form: first(form) + second(form), self.source, self.target)

    def scale(self, c) -> 'HomCochain':
        inner = self
        return HomCochain(f"{c}*{inner.name}", self.degree, lambda form: inner(form).scale(c),
                          self.source, self.target)

    def __neg__(self) -> 'HomCochain':
        inner = self
        return HomCochain(f"-{inner.name}", self.degree, lambda form: -inner(form), self.source, self.target)

    def __sub__(self, other: 'HomCochain') -> 'HomCochain':
        return self + (-other)
