#!/usr/bin/env python3
"""
Script para exportar los autómatas de las figuras en DOT y JSON
"""

import sys
from pathlib import Path

from baumsweet.core.errors import BaumSweetError
from baumsweet.models.automata import dfao_from_json, dfao_prefix, dfao_to_dot, dfao_to_json, parse_fixture

FIGURES = ["fig1", "fig2", "fig3", "fig4:2", "fig4:3", "fig4:4"]


def export_figures(out_dir: str = "figures", check_terms: int = 1024) -> int:
    """Escribe <fig>.dot y <fig>.json; comprueba que el JSON se relee igual."""
    target = Path(out_dir)
    target.mkdir(parents=True, exist_ok=True)
    written = 0
    try:
        for spec in FIGURES:
            a = parse_fixture(spec)
            stem = spec.replace(":", "_")
            (target / f"{stem}.dot").write_text(dfao_to_dot(a), encoding="utf-8")
            text = dfao_to_json(a)
            (target / f"{stem}.json").write_text(text + "\n", encoding="utf-8")
            if dfao_prefix(dfao_from_json(text), check_terms) != dfao_prefix(a, check_terms):
                print(f"❌ {spec}: el JSON releído no genera la misma sucesión")
                return written
            written += 1
            print(f"✅ {spec} exportado ({a.num_states} estados, base {a.base})")
        print(f"\n🎉 {written} autómatas exportados en {target}/")
    except BaumSweetError as e:
        print(f"❌ Error al exportar las figuras: {e}")
    return written


if __name__ == "__main__":
    export_figures(*sys.argv[1:2])
