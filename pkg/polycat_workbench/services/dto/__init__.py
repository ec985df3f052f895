from .report_dto import AxiomReport, CheckReport, Decision, LawCounterexample, Report
from .certificate_dto import (
    CartesianCertificate, FactorizationFailure, Lift, UniversalityCertificate, UniversalObjectResult,
)
from .fibration_dto import FrobeniusMonoid, RefinementPullback
from .elements_dto import ElementsConstruction, element_object, element_polymap_id

__all__ = [
    'ElementsConstruction',
    'element_object',
    'element_polymap_id',
    'FrobeniusMonoid',
    'RefinementPullback',
    'AxiomReport',
    'CheckReport',
    'Decision',
    'LawCounterexample',
    'Report',
    'CartesianCertificate',
    'FactorizationFailure',
    'Lift',
    'UniversalityCertificate',
    'UniversalObjectResult',
]
