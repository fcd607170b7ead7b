class Transaction {
    int amount;
    Transaction(int a) { amount = a; }
    void apply() { }
}
