"""Self-dual codes from bordered lambda-circulant constructions over small rings."""

from .binary import BinaryCode, rref
from .census import WeightProfile, exhaustive_distribution, low_weight_census, min_distance_exhaustive
from .circulant import LambdaCirculant, RingMatrix
from .constructions import (
    ConditionReport,
    ConstructionParams,
    buildup,
    check_conditions,
    neighbour,
    theorem1_generator,
)
from .enumerators import CodeType, EnumeratorFit, classify_type, extremal_bound, fit_enumerator
from .errors import CensusError, ConstructionError, DomainError, ParseError
from .gray import PIPELINES, GrayPipeline, to_binary_code
from .records import CodeRecord, RecordStore, published_records
from .rings import Ring, RingElement

__version__ = "0.1.0"

__all__ = [
    "BinaryCode", "CensusError", "CodeRecord", "CodeType", "ConditionReport", "ConstructionError",
    "ConstructionParams", "DomainError", "EnumeratorFit", "GrayPipeline", "LambdaCirculant", "PIPELINES",
    "ParseError", "RecordStore", "Ring", "RingElement", "RingMatrix", "WeightProfile", "buildup",
    "check_conditions", "classify_type", "exhaustive_distribution", "extremal_bound", "fit_enumerator",
    "low_weight_census", "min_distance_exhaustive", "neighbour", "published_records", "rref",
    "theorem1_generator", "to_binary_code",
]
