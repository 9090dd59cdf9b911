"""Tests for page state kept across Streamlit reruns."""

from streamlit.testing.v1 import AppTest


def _compare_page():
    from src.session import initialize_session_state
    from src.ui.page_compare import render_page_compare

    initialize_session_state()
    render_page_compare()


def _shows_verdict(at: AppTest) -> bool:
    return any(block.value.startswith("**Method:**") for block in at.markdown)


class TestComparePage:
    def test_verdict_survives_a_rerun(self):
        at = AppTest.from_function(_compare_page, default_timeout=60)
        at.run()
        at.button[0].click().run()
        assert _shows_verdict(at)
        assert at.session_state["last_comparison"][2:] == ("binary-dicot", 2)

        at.run()
        assert _shows_verdict(at)

    def test_changing_the_bound_hides_the_stale_verdict(self):
        at = AppTest.from_function(_compare_page, default_timeout=60)
        at.run()
        at.button[0].click().run()
        assert _shows_verdict(at)

        at.number_input[0].set_value(1).run()
        assert not _shows_verdict(at)

    def test_changing_the_universe_hides_the_stale_verdict(self):
        at = AppTest.from_function(_compare_page, default_timeout=60)
        at.run()
        at.button[0].click().run()
        assert _shows_verdict(at)

        at.selectbox[0].select_index(0).run()
        assert not _shows_verdict(at)
