package com.shop.reports;

/** Collects runtime sales metrics for reporting. */
public class MetricsCollector {
    public int sampleCount;

    // Gather the metric samples for the report.
    public void collect() {
    }
}
