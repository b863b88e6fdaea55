# components/rewrite_trace.py
import streamlit as st

from config.config import EXPLORE_BUDGET
from data.loader import ParseError, parse_term
from data.report import rewrite_frame
from engine.ars import Mode, explore, rewrite_sequence


def show_rewrite_playground(program_file):
    """Root rewriting of a user term: a single-path listing or a breadth-first exploration."""
    st.subheader("Rewrite Playground")

    left_col, right_col = st.columns([3, 1])
    with left_col:
        text = st.text_input("Start term", value="", placeholder="f(s(0),0)")
    with right_col:
        mode = Mode(st.radio("Mode", options=["trs", "lp"], horizontal=True))

    rule_options = ["First applicable"] + [f"{k}: {rule}" for k, rule in enumerate(program_file.rules)]
    rule_choice = st.selectbox("Rule", options=rule_options, index=0)
    steps = st.slider("Steps", min_value=1, max_value=50, value=5)
    breadth_first = st.checkbox("Explore all rules breadth-first", value=False)

    if not text.strip():
        st.caption("Enter a term over the program's symbols; declared variables stay variables.")
        return

    try:
        term = parse_term(text, program_file.variables, program_file.arities, source="start term")
    except ParseError as exc:
        st.error(str(exc))
        return

    if breadth_first:
        result = explore(mode, program_file.rules, term, max(steps, EXPLORE_BUDGET))
        df_view = rewrite_frame(result.traces)
        if result.exhausted:
            st.warning("Exploration budget exhausted; the listing is partial.")
    else:
        rule_index = None if rule_choice == rule_options[0] else rule_options.index(rule_choice) - 1
        traces = rewrite_sequence(mode, program_file.rules, term, steps, rule_index)
        if not traces:
            st.info("The term is irreducible at the root.")
            return
        df_view = rewrite_frame(traces)

    st.dataframe(df_view, hide_index=True, use_container_width=True)
