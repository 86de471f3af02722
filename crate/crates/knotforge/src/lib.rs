pub mod census;
pub mod cli;
pub mod codec;
pub mod diagram;
pub mod fixtures;
pub mod graph;
pub mod seifert;
pub mod synthesis;
pub mod tait;
pub mod verify;
pub mod wicks;
