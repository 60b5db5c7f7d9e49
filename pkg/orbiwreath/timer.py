from time import time


class Timer(object):
    """
    Stopwatch used to time verification runs

    :Example:

    with Timer() as timer:
        verify('thm-es', gamma, desc, 5)
    timer.elapsed_ms  #=> 12
    """

    def __init__(self):
        self.start_time = None
        self.end_time = None

    def start(self):
        self.start_time = self._current_time()
        self.end_time = None
        return self

    def stop(self):
        if self.start_time is None:
            raise RuntimeError('timer was never started')
        self.end_time = self._current_time()
        return self.elapsed_ms

    @property
    def running(self):
        return self.start_time is not None and self.end_time is None

    @property
    def elapsed_ms(self):
        """
        Milliseconds between start and stop, or until now while the timer runs

        :rtype: int
        """
        if self.start_time is None:
            return 0
        end = self.end_time if self.end_time is not None else self._current_time()
        return int(round((end - self.start_time) * 1000))

    def reset(self):
        self.start_time = None
        self.end_time = None

    def __enter__(self):
        return self.start()

    def __exit__(self, *exc):
        self.stop()
        return False

    # private

    def _current_time(self):
        return time()
