from threading import Lock


class Counters(object):
    """ Enumeration statistics surfaced in verification reports """

    def __init__(self):
        self._lock = Lock()
        self.homs_enumerated = 0
        self.classes = 0

    def reset(self):
        with self._lock:
            self.homs_enumerated = 0
            self.classes = 0

    def add(self, homs=0, classes=0):
        with self._lock:
            self.homs_enumerated += homs
            self.classes += classes

    def snapshot(self):
        with self._lock:
            return {'homs_enumerated': self.homs_enumerated, 'classes': self.classes}


counters = Counters()
