package com.shop.reports;

/** Formats report rows into readable text tables. */
public class ReportFormatter implements Formatter {
    public String delimiter;

    // Render the metric data as an aligned report table.
    public String format(Object data) {
        return TextUtil.pad("row");
    }
}
