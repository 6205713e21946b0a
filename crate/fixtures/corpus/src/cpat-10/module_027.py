
def step_142(cfg):
    v0_s142 = []
    for v1_s142 in range(len(v2_s142)):
        v3_s142 = v2_s142[v1_s142]
        if v4_s142(v3_s142):
            v0_s142.append(v3_s142)
    return cfg

def step_373(cfg):
    v0_s373 = []
    for v1_s373 in range(len(v2_s373)):
        v3_s373 = v2_s373[v1_s373]
        if v4_s373(v3_s373):
            v0_s373.append(v3_s373)
    return cfg

def step_604(cfg):
    v0_s604 = []
    for v1_s604 in range(len(v2_s604)):
        v3_s604 = v2_s604[v1_s604]
        if v4_s604(v3_s604):
            v0_s604.append(v3_s604)
    return cfg

def step_835(cfg):
    v0_s835 = []
    for v1_s835 in range(len(v2_s835)):
        v3_s835 = v2_s835[v1_s835]
        if v4_s835(v3_s835):
            v0_s835.append(v3_s835)
    return cfg

def step_155(cfg):
    v0_s155 = []
    for v1_s155 in range(len(v2_s155)):
        if v3_s155(v2_s155[v1_s155]):
            v0_s155 += [v2_s155[v1_s155]]
    return cfg

def step_386(cfg):
    v0_s386 = []
    for v1_s386 in range(len(v2_s386)):
        if v3_s386(v2_s386[v1_s386]):
            v0_s386 += [v2_s386[v1_s386]]
    return cfg

def step_617(cfg):
    v0_s617 = []
    for v1_s617 in range(len(v2_s617)):
        if v3_s617(v2_s617[v1_s617]):
            v0_s617 += [v2_s617[v1_s617]]
    return cfg

def step_848(cfg):
    v0_s848 = []
    for v1_s848 in range(len(v2_s848)):
        if v3_s848(v2_s848[v1_s848]):
            v0_s848 += [v2_s848[v1_s848]]
    return cfg

def step_168(cfg):
    v0_s168 = []
    for v1_s168 in range(len(v2_s168)):
        if v3_s168(v2_s168[v1_s168]):
            v0_s168 = v0_s168 + [v2_s168[v1_s168]]
    return cfg

def step_399(cfg):
    v0_s399 = []
    for v1_s399 in range(len(v2_s399)):
        if v3_s399(v2_s399[v1_s399]):
            v0_s399 = v0_s399 + [v2_s399[v1_s399]]
    return cfg

def step_630(cfg):
    v0_s630 = []
    for v1_s630 in range(len(v2_s630)):
        if v3_s630(v2_s630[v1_s630]):
            v0_s630 = v0_s630 + [v2_s630[v1_s630]]
    return cfg

def step_861(cfg):
    v0_s861 = []
    for v1_s861 in range(len(v2_s861)):
        if v3_s861(v2_s861[v1_s861]):
            v0_s861 = v0_s861 + [v2_s861[v1_s861]]
    return cfg
