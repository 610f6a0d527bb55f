from django.db import models
import uuid


class SearchRun(models.Model):
    """Summary of one recorded exhaustive search"""

    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)

    # Parameters
    max_len = models.PositiveIntegerField(help_text="Longest word length scanned")
    symmetry = models.BooleanField(default=True, help_text="One word per symmetry orbit")
    jobs = models.PositiveIntegerField(default=1)
    oracle_seed = models.IntegerField(default=0)

    # Counts
    words_scanned = models.PositiveIntegerField(default=0)
    configs_found = models.PositiveIntegerField(default=0)
    theorem2_successes = models.PositiveIntegerField(default=0)
    theorem2_separated = models.PositiveIntegerField(default=0, help_text="Excess covers decomposed from a separated copy")
    theorem2_failures = models.PositiveIntegerField(default=0)
    conjecture_witnesses = models.PositiveIntegerField(default=0)
    near_misses = models.PositiveIntegerField(default=0)
    counterexamples = models.PositiveIntegerField(default=0)
    oracle_checks = models.PositiveIntegerField(default=0)
    oracle_mismatches = models.PositiveIntegerField(default=0)

    report_path = models.CharField(max_length=500, blank=True, help_text="JSON lines file with every record")
    duration_seconds = models.FloatField(default=0)
    created_at = models.DateTimeField(auto_now_add=True)

    COUNT_FIELDS = [
        'words_scanned', 'configs_found', 'theorem2_successes', 'theorem2_separated',
        'theorem2_failures', 'conjecture_witnesses', 'near_misses', 'counterexamples', 'oracle_checks',
        'oracle_mismatches',
    ]

    class Meta:
        ordering = ['-created_at']
        indexes = [
            models.Index(fields=['max_len', '-created_at'], name='search_run_max_len_idx'),
        ]

    def __str__(self):
        return f"Search to length {self.max_len} ({self.counterexamples} counterexamples)"

    @classmethod
    def record(cls, summary, jobs=1, oracle_seed=0, report_path='', duration_seconds=0):
        """Store a SearchSummary"""
        payload = summary.to_json()
        return cls.objects.create(
            max_len=summary.max_len,
            symmetry=summary.symmetry,
            jobs=jobs,
            oracle_seed=oracle_seed,
            report_path=report_path or '',
            duration_seconds=duration_seconds,
            **{field: payload[field] for field in cls.COUNT_FIELDS},
        )

    def is_clean(self):
        """No Theorem 2 failures, counterexamples or oracle mismatches"""
        return not (self.theorem2_failures or self.counterexamples or self.oracle_mismatches)
