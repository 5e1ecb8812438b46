# Cada módulo registra sus checks al importarse
from baumsweet.verify.checks import (  # noqa: F401
    automata_checks,
    regularity_checks,
    sequence_checks,
    series_checks,
    word_checks,
)
