package com.shop.orders;

/** Keeps submitted orders in memory for quick retrieval. */
public class OrderStore implements Store {
    public int savedOrders;

    // Persist the accepted order.
    public void save(Order order) {
    }

    // Retrieve an order by its identifier.
    public Order find(int id) {
        return null;
    }
}
