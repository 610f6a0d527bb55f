# Generated by Django 4.2.7 on 2026-10-18 09:12

from django.db import migrations, models
import uuid


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SearchRun',
            fields=[
                ('id', models.UUIDField(default=uuid.uuid4, editable=False, primary_key=True, serialize=False)),
                ('max_len', models.PositiveIntegerField(help_text='Longest word length scanned')),
                ('symmetry', models.BooleanField(default=True, help_text='One word per symmetry orbit')),
                ('jobs', models.PositiveIntegerField(default=1)),
                ('oracle_seed', models.IntegerField(default=0)),
                ('words_scanned', models.PositiveIntegerField(default=0)),
                ('configs_found', models.PositiveIntegerField(default=0)),
                ('theorem2_successes', models.PositiveIntegerField(default=0)),
                ('theorem2_separated', models.PositiveIntegerField(default=0, help_text='Excess covers decomposed from a separated copy')),
                ('theorem2_failures', models.PositiveIntegerField(default=0)),
                ('conjecture_witnesses', models.PositiveIntegerField(default=0)),
                ('near_misses', models.PositiveIntegerField(default=0)),
                ('counterexamples', models.PositiveIntegerField(default=0)),
                ('oracle_checks', models.PositiveIntegerField(default=0)),
                ('oracle_mismatches', models.PositiveIntegerField(default=0)),
                ('report_path', models.CharField(blank=True, help_text='JSON lines file with every record', max_length=500)),
                ('duration_seconds', models.FloatField(default=0)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-created_at'],
                'indexes': [models.Index(fields=['max_len', '-created_at'], name='search_run_max_len_idx')],
            },
        ),
    ]
