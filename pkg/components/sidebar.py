# components/sidebar.py
import streamlit as st
from pathlib import Path

from config.config import DEFAULT_STEPS, MAX_TERM_SIZE, SAMPLE_PROGRAM_DIR


def list_sample_programs(directory: Path = SAMPLE_PROGRAM_DIR) -> dict:
    """Bundled sample programs, name -> path."""
    if not directory.exists():
        return {}
    return {p.stem: p for p in sorted(directory.glob("*.trs"))}


def render_sidebar(refresh_interval_seconds):
    st.sidebar.title("Program & Analysis")

    # Program source
    source = st.sidebar.radio(
        "Program source",
        options=["Sample", "Upload", "Path"],
        index=0,
        horizontal=True,
    )

    program_text = None
    program_name = None
    watched_path = None
    if source == "Sample":
        samples = list_sample_programs()
        if samples:
            program_name = st.sidebar.selectbox("Sample program", options=list(samples), index=0)
            program_text = samples[program_name].read_text(encoding="utf-8")
        else:
            st.sidebar.warning(f"No sample programs in {SAMPLE_PROGRAM_DIR}")
    elif source == "Upload":
        uploaded = st.sidebar.file_uploader("Program file", type=["trs", "txt"])
        if uploaded is not None:
            program_name = uploaded.name
            program_text = uploaded.getvalue().decode("utf-8", errors="replace")
    else:
        raw_path = st.sidebar.text_input("Path on disk", value="")
        if raw_path.strip():
            watched_path = Path(raw_path.strip()).expanduser()
            program_name = str(watched_path)

    # Auto refresh only makes sense for a file that can change on disk
    auto_refresh = False
    if watched_path is not None:
        auto_refresh = st.sidebar.checkbox("Reload file automatically", value=True)

    manual_refresh = st.sidebar.button("Re-run analysis")

    st.sidebar.markdown("---")
    mode = st.sidebar.selectbox(
        "Rewrite mode",
        options=["From file", "Both", "TRS", "LP"],
        index=0,
        help="'From file' uses the (MODE ...) header when present, both modes otherwise",
    )
    steps = st.sidebar.number_input("Witness prefix length", min_value=0, max_value=64, value=DEFAULT_STEPS, step=1)
    max_term_size = st.sidebar.number_input(
        "Max witness term size (nodes)",
        min_value=1,
        value=MAX_TERM_SIZE,
        step=10_000,
    )

    # compact info
    st.sidebar.markdown("---")
    if auto_refresh:
        st.sidebar.markdown(f"Auto-reload: ⏱️ {refresh_interval_seconds}s")

    return {
        "program_text": program_text,
        "program_name": program_name,
        "watched_path": watched_path,
        "auto_refresh": auto_refresh,
        "manual_refresh": manual_refresh,
        "mode": None if mode == "From file" else mode.lower(),
        "steps": int(steps),
        "max_term_size": int(max_term_size),
    }
