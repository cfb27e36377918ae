"""Garside normal forms, cyclic sliding and Nielsen-Thurston classification in braid groups."""

from .classify import Classification, Config, classify, verify_certificate
from .normal_form import CanonicalForm, normal_form
from .simple import BraidWord, SimpleElement, braid_word, parse_word

__all__ = [
    "BraidWord",
    "CanonicalForm",
    "Classification",
    "Config",
    "SimpleElement",
    "braid_word",
    "classify",
    "normal_form",
    "parse_word",
    "verify_certificate",
]
