# components/styles.py
import html
from pathlib import Path

import streamlit as st

DEFAULT_CSS = Path(__file__).resolve().parent.parent / "assets" / "styles.css"

# card kind -> (icon, label); kinds match the .summary-card.<kind> rules in styles.css
CARD_KINDS = {
    "found": ("🔎", "Detected"),
    "verified": ("✅", "Verified"),
    "failed": ("❌", "Failed"),
    "truncated": ("✂️", "Size-bounded"),
}


def inject_styles(path: Path = DEFAULT_CSS) -> bool:
    """Inject the certificate card CSS. False if the stylesheet is missing or unreadable."""
    try:
        css = Path(path).read_text(encoding="utf-8")
    except OSError:
        return False
    st.markdown(f"<style>{css}</style>", unsafe_allow_html=True)
    return True


def summary_card(kind: str, number: int, extra: str) -> str:
    icon, label = CARD_KINDS[kind]
    return (
        f'<div class="summary-card {kind}">'
        f'<div class="summary-label">{icon} {label}</div>'
        f'<div class="summary-number">{number}</div>'
        f'<div class="summary-extra">{html.escape(extra)}</div>'
        "</div>"
    )


def summary_cards(cards: list) -> str:
    """cards: (kind, number, extra) triples, rendered in order."""
    return '<div class="summary-cards">' + "".join(summary_card(*card) for card in cards) + "</div>"


def rule_block(lines: list) -> str:
    """Monospace block for rule text; arrows and brackets are escaped."""
    return "<div class='rule-text'>" + "<br>".join(html.escape(line) for line in lines) + "</div>"
