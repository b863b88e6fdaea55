# components/certificate_summary.py
import streamlit as st

from components.styles import summary_cards
from data.report import certificates_frame


def show_certificate_summary(report):
    """
    Counts of detected / verified / failed / truncated certificates as cards,
    then one row per certificate with its parameters and per-mode verdicts.
    """
    st.subheader("Recurrent Pairs")

    found = len(report.certificates)
    verified = len(report.verified)
    truncated = sum(1 for c in report.certificates if c.truncated)
    failed = found - verified

    card_html = summary_cards([
        ("found", found, f"Recurrent pairs over {len(report.program.rules)} rules"),
        ("verified", verified, f"Chain prefix of {report.steps} segments rewritten"),
        ("failed", failed, "A segment did not reach the next witness"),
        ("truncated", truncated, f"Terms above {report.max_term_size:,} nodes not built"),
    ])
    st.markdown(card_html, unsafe_allow_html=True)

    if not found:
        st.info("No recurrent pair in this program.")
        return

    df_view = certificates_frame(report)
    st.dataframe(df_view, hide_index=True, use_container_width=True)
    st.caption(f"Analysis took {report.timing:.3f}s in mode(s): {', '.join(m.value for m in report.modes)}")
