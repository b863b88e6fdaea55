# main_app.py
import logging

import streamlit as st
from streamlit_autorefresh import st_autorefresh

# ---------------- CONFIG IMPORTS ----------------
from config.config import REFRESH_INTERVAL_SECONDS, DEBUG_MODE, LOG_LEVEL
from data.loader import ParseError, format_program, parse_program
from data.report import build_report, report_to_json, resolve_modes

# ---------------- COMPONENT IMPORTS ----------------
from components.sidebar import render_sidebar
from components.certificate_summary import show_certificate_summary
from components.witness_table import show_witness_tables
from components.tower_growth import show_tower_growth
from components.rewrite_trace import show_rewrite_playground
from components.styles import inject_styles

logging.basicConfig(level=LOG_LEVEL, format="%(levelname)s %(name)s: %(message)s")
_LOGGER = logging.getLogger("main_app")


# ----------------------------------------------------
# APP CONFIG
# ----------------------------------------------------
st.set_page_config(page_title="♾️ Binary Chain Analyzer", layout="wide")
inject_styles()

st.title("♾️ Binary Chain Analyzer")
st.caption("Recurrent pairs of root-rewriting rules and the infinite chains they induce.")


# ----------------------------------------------------
# FUNCTION: Cached analysis
# ----------------------------------------------------
@st.cache_resource(show_spinner="Detecting recurrent pairs and rewriting chain prefixes...")
def analyze(program_text, program_name, mode_flag, steps, max_term_size):
    """
    Parse + detect + verify. Cached as a resource: witness terms are too deep
    to pickle, and reports are never mutated after construction.
    """
    _LOGGER.info("analyzing %s", program_name or "<text>")
    pf = parse_program(program_text, source=program_name)
    return build_report(pf, resolve_modes(mode_flag, pf), steps, max_term_size)


# ----------------------------------------------------
# SIDEBAR
# ----------------------------------------------------
sb = render_sidebar(REFRESH_INTERVAL_SECONDS)

# ----------------------------------------------------
# AUTO REFRESH LOGIC
# ----------------------------------------------------
# Re-read a watched file every n seconds; unchanged text hits the cache
if sb["auto_refresh"]:
    st_autorefresh(interval=REFRESH_INTERVAL_SECONDS * 1000, key="autorefresh_program")

if sb["manual_refresh"]:
    st.cache_resource.clear()
    st.rerun()


# ----------------------------------------------------
# LOAD PROGRAM
# ----------------------------------------------------
program_text = sb["program_text"]
if sb["watched_path"] is not None:
    try:
        program_text = sb["watched_path"].read_text(encoding="utf-8")
    except OSError as exc:
        st.error(f"Cannot read {sb['watched_path']}: {exc}")
        st.stop()

if program_text is None:
    st.info("Choose a sample program, upload one, or give a path in the sidebar.")
    st.stop()

try:
    report = analyze(program_text, sb["program_name"], sb["mode"], sb["steps"], sb["max_term_size"])
except ParseError as exc:
    st.error(f"Parse error: {exc}")
    with st.expander("Program text", expanded=True):
        st.code(program_text)
    st.stop()

with st.expander("Program", expanded=False):
    st.code(format_program(report.program))

# ----------------------------------------------------
# DEBUG PANEL (Optional)
# ----------------------------------------------------
if DEBUG_MODE:
    with st.sidebar.expander("Debug / JSON report", expanded=False):
        st.code(report_to_json(report), language="json")
        st.caption("Debug mode active (local).")

# ----------------------------------------------------
# MAIN DASHBOARD SECTIONS
# ----------------------------------------------------
# 1️⃣ CERTIFICATE SUMMARY
show_certificate_summary(report)
st.divider()

# 2️⃣ WITNESS CHAINS
show_witness_tables(report)
st.divider()

# 3️⃣ TOWER HEIGHTS
show_tower_growth(report, log_scale=st.checkbox("Logarithmic height axis", value=False))
st.divider()

# 4️⃣ REWRITE PLAYGROUND
show_rewrite_playground(report.program)

# ----------------------------------------------------
# FOOTER
# ----------------------------------------------------
st.markdown("---")
if sb["auto_refresh"]:
    st.caption(f"🔄 Reloading {sb['program_name']} every {REFRESH_INTERVAL_SECONDS} seconds.")
if DEBUG_MODE:
    st.caption("🧑‍💻 Debug mode active (local environment).")
