# components/tower_growth.py
import streamlit as st
import plotly.express as px

from data.report import heights_frame


def show_tower_growth(report, log_scale=False):
    """Π and Π′ per chain index for every certificate, one line chart each."""
    st.subheader("Tower Heights Along the Chain")

    if not report.certificates:
        st.info("No chain to plot.")
        return

    cols = st.columns(min(len(report.certificates), 2))
    for index, cert in enumerate(report.certificates):
        witness = cert.primary
        if witness is None or not witness.entries:
            continue
        df_heights = heights_frame(witness)
        fig = px.line(
            df_heights,
            x="n",
            y="Height",
            color="Tower",
            markers=True,
            log_y=log_scale,
            title=f"Pair {cert.pair.r1_index},{cert.pair.r2_index} ({cert.growth.value})",
        )
        fig.update_layout(height=320, margin=dict(l=10, r=10, t=40, b=10), legend_title_text="")
        fig.update_xaxes(dtick=1)
        with cols[index % len(cols)]:
            st.plotly_chart(fig, use_container_width=True)
