fn main() {
    negabase::cli::main()
}
