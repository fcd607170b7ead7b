class Entity {
    int id;
    int getId() { return id; }
    void setId(int v) { id = v; }
}
