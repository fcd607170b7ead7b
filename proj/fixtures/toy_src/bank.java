class Bank {
    Logger logger;
    Bank() { logger = new Logger(); }
    void pay(Customer c, int amount) {
        Account a;
        a = new Account(amount);
        a.deposit(amount);
        logger.info();
    }
    void audit(Transaction t) { t.apply(); logger.info(); }
}
