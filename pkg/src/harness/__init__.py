# Harness module: theorem checks, reports, and the check runner
