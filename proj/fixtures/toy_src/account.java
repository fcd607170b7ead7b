class Account extends Entity {
    int balance;
    int ownerId;
    Account(int owner) { ownerId = owner; }
    void deposit(int amount) { balance = balance + amount; log(amount); }
    void withdraw(int amount) { balance = balance - amount; log(amount); }
    int getBalance() { return balance; }
    void log(int amount) { }
}
