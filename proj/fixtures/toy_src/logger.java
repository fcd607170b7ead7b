class Logger {
    int level;
    Logger() { level = 0; }
    void info() { }
    void warn() { }
}
