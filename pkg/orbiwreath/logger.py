import logging


class Logger(object):
    def __init__(self):
        self._logger = logging.getLogger(__name__.split('.')[0])
        self.level = logging.WARNING
        self._filename = None
        self._ignored = []

    @property
    def level(self):
        return self._logger.level

    @level.setter
    def level(self, severity):
        if isinstance(severity, str):
            severity = severity.upper()
        self._logger.setLevel(severity)

    @property
    def filename(self):
        return self._filename

    @filename.setter
    def filename(self, path):
        self._filename = path
        for hdlr in self._logger.handlers[:]:  # remove all old handlers
            hdlr.close()
            self._logger.removeHandler(hdlr)

        if path is not None:
            fileh = logging.FileHandler(path, 'a')
            fileh.setFormatter(logging.Formatter('%(asctime)s %(levelname)s %(message)s'))
            self._logger.addHandler(fileh)

    @property
    def ignored(self):
        return list(self._ignored)

    def ignore(self, *ids):
        for _id in ids:
            if _id not in self._ignored:
                self._ignored.append(_id)

    def unignore(self, *ids):
        self._ignored = [_id for _id in self._ignored if _id not in ids]

    def warning(self, msg, ids=None, *args, **kwargs):
        ids = ids or []
        if set(self._ignored).intersection(ids):
            return
        prefix = '[{}] '.format(', '.join(ids)) if ids else ''
        self._logger.warning(prefix + msg, *args, **kwargs)

    warn = warning

    def cap_warning(self, what, size, cap):
        """
        Warns when a computation uses more than half of its configured cap

        :param what: name of the cap
        :param size: size of the current computation
        :param cap: configured cap
        """
        if cap and size * 2 > cap:
            self.warning('{} at {} of cap {}'.format(what, size, cap), ids=['caps'])

    def __getattr__(self, item):
        return getattr(self._logger, item)
