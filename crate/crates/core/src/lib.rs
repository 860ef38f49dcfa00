pub mod bsgs;
pub mod ff;
pub mod forms;
pub mod matlin;
pub mod numtheory;
pub mod pipeline;
pub mod seeds;
pub mod tensor;
