"""Avoidability workbench for doubled patterns in combinatorics on words.

Modules: words (periods, exponents, free-word generation), patterns
(occurrence search, enumeration, splitted words), series (power-series
growth certificates), spectral (avoidability exponents), certify (morphism
corpus and bounded verification), cli (command-line front end).
"""

__version__ = "0.1.0"
