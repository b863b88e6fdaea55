# components/witness_table.py
import streamlit as st

from data.loader import format_rule
from data.report import witness_frame
from components.styles import rule_block


def show_witness_tables(report):
    st.subheader("Witness Chains")

    if not report.certificates:
        st.info("Nothing to show.")
        return

    for cert in report.certificates:
        pair = cert.pair
        label = f"Pair {pair.r1_index},{pair.r2_index}  ·  n1={pair.n1} n2={pair.n2} n3={pair.n3}  ·  t={pair.t_kind.value}"
        with st.expander(label, expanded=len(report.certificates) == 1):
            st.markdown(
                rule_block([f"r1: {format_rule(pair.r1)}", f"r2: {format_rule(pair.r2)}"]),
                unsafe_allow_html=True,
            )
            if pair.notes:
                st.warning("Notes: " + ", ".join(pair.notes))
            tabs = st.tabs([mode.value.upper() for mode in cert.witnesses])
            for tab, (mode, witness) in zip(tabs, cert.witnesses.items()):
                with tab:
                    if witness.verified:
                        st.success(f"Verified up to chain index {witness.largest_verified}")
                    elif witness.requested and not witness.attempted:
                        st.warning("The size bound was reached before the first segment; nothing was rewritten.")
                    else:
                        st.error("A chain segment failed to rewrite to the next witness term")
                    if witness.truncated:
                        st.info("Heights past the size bound are reported without building the terms.")
                    st.dataframe(witness_frame(witness), hide_index=True, use_container_width=True)
