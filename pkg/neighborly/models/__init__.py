from neighborly.models.signs import Chessboard, Color, ReorientationSet, SignedCircuit, SignMatrix
from neighborly.models.travel import Segment, Travel, TravelKind
from neighborly.models.family import FamilyBoard, FamilyParams
from neighborly.models.geometry import (
    GaleDiagram,
    Hyperplane,
    Partition,
    PointConfig,
    ProjectiveMap,
    SignVector,
)
from neighborly.models.bounds import BoundFunction, BoundRecord, BoundTable, DerivedBound
from neighborly.models.certificate import Certificate, Claim, Coverage

__all__ = [
    "BoundFunction",
    "BoundRecord",
    "BoundTable",
    "Certificate",
    "Chessboard",
    "Claim",
    "Color",
    "Coverage",
    "DerivedBound",
    "FamilyBoard",
    "FamilyParams",
    "GaleDiagram",
    "Hyperplane",
    "Partition",
    "PointConfig",
    "ProjectiveMap",
    "ReorientationSet",
    "Segment",
    "SignMatrix",
    "SignVector",
    "SignedCircuit",
    "Travel",
    "TravelKind",
]
