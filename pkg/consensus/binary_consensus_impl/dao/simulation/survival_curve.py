import numpy as np
import pandas as pd

from consensus import constants


class SurvivalCurve(object):
    """
    Represents empirical survival probabilities of the two phases over a time grid: the fraction of trials in
    which some node still holds state 1 (phase 1 unfinished) and in which some node still holds state e1 or 1
    (phase 2 unfinished), together with the exponential tail bound min(1, n exp(-delta t)) when delta is known
    """

    def __init__(self, grid, phase1, phase2, trials, tail_bound=None):
        self.grid = np.asarray(grid, dtype=np.float64)
        self.phase1 = np.asarray(phase1, dtype=np.float64)
        self.phase2 = np.asarray(phase2, dtype=np.float64)
        self.trials = trials
        self.tail_bound = None if tail_bound is None else np.asarray(tail_bound, dtype=np.float64)

    def binomial_stderr(self, phase=1):
        """
        Args:
            :phase: 1 or 2

        Returns:
            the binomial standard error sqrt(p (1 - p) / trials) at every grid point
        """
        p = self.phase1 if phase == 1 else self.phase2
        return np.sqrt(p * (1.0 - p) / self.trials)

    def to_dataframe(self):
        """
        Returns:
            pandas dataframe with one row per grid point
        """
        tail = self.tail_bound if self.tail_bound is not None else np.full(self.grid.shape, np.nan)
        return pd.DataFrame({
            constants.CSV_CONFIG.SURVIVAL_COLUMNS[0]: self.grid,
            constants.CSV_CONFIG.SURVIVAL_COLUMNS[1]: self.phase1,
            constants.CSV_CONFIG.SURVIVAL_COLUMNS[2]: self.phase2,
            constants.CSV_CONFIG.SURVIVAL_COLUMNS[3]: tail,
        }, columns=constants.CSV_CONFIG.SURVIVAL_COLUMNS)

    def __repr__(self):
        return "SurvivalCurve(points={}, trials={})".format(len(self.grid), self.trials)
