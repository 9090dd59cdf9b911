# Reporting module: report tables, run summaries, and the HTML report
