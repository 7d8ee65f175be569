package com.shop.orders;

/** Coordinates order processing and delegates validation and storage. */
public class OrderManager implements OrderService {
    public OrderValidator validator;
    public OrderStore store;
    public ShopWindow window;
    public int pendingOrders;

    // Submit a new customer order for processing.
    public boolean submitOrder(Order order) {
        if (validator.validate(order)) {
            store.save(order);
            window.refresh();
            return true;
        }
        return false;
    }

    // Look up a stored order and refresh the sales report.
    public Order findOrder(int id) {
        ReportBuilder.build();
        return store.find(id);
    }
}
