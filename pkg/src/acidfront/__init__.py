"""acidfront - finite-volume fronts for acid-mediated tumour invasion."""

__version__ = "0.1.0"
