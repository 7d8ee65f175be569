package com.shop.reports;

/** Builds the sales report from collected metrics. */
public class ReportBuilder {
    public ReportFormatter formatter;
    public MetricsCollector metrics;

    // Assemble the sales report and format the metric rows.
    public Report build() {
        metrics.collect();
        formatter.format(null);
        return null;
    }
}
