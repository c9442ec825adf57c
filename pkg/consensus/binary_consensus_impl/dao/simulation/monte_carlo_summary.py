from consensus import constants


class MonteCarloSummary(object):
    """
    Represents the aggregate of independent trials: sample means of the phase durations and the half-widths of
    their 95% confidence intervals (1.96 sample standard deviations over the square root of the sample size)
    """

    def __init__(self, trials, mean_t1, ci95_t1, mean_t2, ci95_t2, seed, truncated=0, draws=0, t2_samples=0,
                 stderr_t1=None, stderr_t2=None):
        """
        Initialize the summary

        Args:
            :trials: number of trials run
            :mean_t1: sample mean of T1 over the trials that completed phase 1
            :ci95_t1: half-width of the 95% confidence interval of mean_t1
            :mean_t2: sample mean of T2 over the trials that completed phase 2, None if none did
            :ci95_t2: half-width of the 95% confidence interval of mean_t2, None if unusable
            :seed: the base seed, trial k used seed + k
            :truncated: number of trials that hit the time horizon
            :draws: number of trials started from a draw (no phase 2)
            :t2_samples: number of trials entering the T2 statistics
            :stderr_t1: standard error of mean_t1
            :stderr_t2: standard error of mean_t2
        """
        self.trials = trials
        self.mean_t1 = mean_t1
        self.ci95_t1 = ci95_t1
        self.mean_t2 = mean_t2
        self.ci95_t2 = ci95_t2
        self.seed = seed
        self.truncated = truncated
        self.draws = draws
        self.t2_samples = t2_samples
        self.stderr_t1 = stderr_t1
        self.stderr_t2 = stderr_t2

    @property
    def t2_usable(self):
        return self.mean_t2 is not None

    def to_json(self):
        """
        Returns:
            dict with the JSON representation of the summary
        """
        return {
            constants.JSON_CONFIG.JSON_TRIALS: self.trials,
            constants.JSON_CONFIG.JSON_MEAN_T1: self.mean_t1,
            constants.JSON_CONFIG.JSON_CI95_T1: self.ci95_t1,
            constants.JSON_CONFIG.JSON_MEAN_T2: self.mean_t2,
            constants.JSON_CONFIG.JSON_CI95_T2: self.ci95_t2,
            constants.JSON_CONFIG.JSON_SEED: self.seed,
            constants.JSON_CONFIG.JSON_TRUNCATED: self.truncated,
            constants.JSON_CONFIG.JSON_T2_USABLE: self.t2_usable,
        }

    def __repr__(self):
        return "MonteCarloSummary(trials={}, mean_t1={}, ci95_t1={}, mean_t2={}, ci95_t2={}, truncated={})".format(
            self.trials, self.mean_t1, self.ci95_t1, self.mean_t2, self.ci95_t2, self.truncated)
