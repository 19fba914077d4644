from .degrees import Degree, Window
from .rings import Generator, PolyElement, RingPresentation, enumerate_monomials
from .maps import RingMap

__all__ = [
    "Degree",
    "Window",
    "Generator",
    "PolyElement",
    "RingPresentation",
    "enumerate_monomials",
    "RingMap",
]
