# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Check the gradients against central finite differences.

For each seed, a random relu network is checked at first and second
order, and the total training loss of a small model is checked with
each regularizer.  Random points near a relu or max kink are drawn
again.

"""

from compat_reason.lib.autodiff.gradcheck import (
    check_first_order, check_second_order, check_reason_loss)
from compat_reason.lib.compat.exceptions import SelfCheckFailed
from compat_reason.lib.reasoning.regularizers import REGULARIZERS
from compat_reason.management.base import SiteCommand


class Command(SiteCommand):
    help = "Run the finite-difference gradient checks."

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument(
            '--seeds', type=int, default=100, help="Number of random seeds")

    def handle(self, *args, **options):
        site = self.get_site(options)
        conf = site.plugins.autodiff
        kw = conf.check_options()
        first = options['seed'] or 0
        checks = []
        for seed in range(first, first + options['seeds']):
            checks.append(check_first_order(
                seed, tolerance=conf.first_order_tolerance, **kw))
            checks.append(check_second_order(
                seed, tolerance=conf.second_order_tolerance, **kw))
            for reg in sorted(REGULARIZERS):
                checks.append(check_reason_loss(
                    seed, reg, tolerance=conf.second_order_tolerance, **kw))
        failed = [c for c in checks if not c.ok]
        for c in failed:
            self.stdout.write(str(c))
        worst = max(checks, key=lambda c: c.error)
        self.stdout.write("%d checks, %d failed, worst %s" % (
            len(checks), len(failed), worst))
        if failed:
            raise SelfCheckFailed("%d of %d gradient checks failed" % (
                len(failed), len(checks)))
