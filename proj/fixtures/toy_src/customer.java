class Customer extends Entity {
    String name;
    Account account;
    Customer(String n) { name = n; }
    void open() { account = new Account(0); }
    int balance() { return account.getBalance(); }
}
