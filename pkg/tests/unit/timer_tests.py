import pytest

from orbiwreath.stats import Counters
from orbiwreath.timer import Timer


class TestTimer(object):
    def test_measures_milliseconds_between_start_and_stop(self, mocker):
        mocker.patch.object(Timer, '_current_time', side_effect=[10.0, 10.25])
        with Timer() as timer:
            pass
        assert timer.elapsed_ms == 250

    def test_is_zero_before_starting(self):
        assert Timer().elapsed_ms == 0

    def test_reports_running_state(self, mocker):
        mocker.patch.object(Timer, '_current_time', side_effect=[1.0, 2.0])
        timer = Timer().start()
        assert timer.running
        assert timer.stop() == 1000
        assert not timer.running

    def test_cannot_stop_before_starting(self):
        with pytest.raises(RuntimeError):
            Timer().stop()

    def test_reset_clears_the_measurement(self, mocker):
        mocker.patch.object(Timer, '_current_time', side_effect=[1.0, 2.0])
        timer = Timer().start()
        timer.stop()
        timer.reset()
        assert timer.elapsed_ms == 0


class TestCounters(object):
    def test_accumulates_and_resets(self):
        counters = Counters()
        counters.add(homs=5, classes=2)
        counters.add(homs=3)
        assert counters.snapshot() == {'homs_enumerated': 8, 'classes': 2}
        counters.reset()
        assert counters.snapshot() == {'homs_enumerated': 0, 'classes': 0}
