
def step_883(cfg):
    v0_s883 = []
    for v1_s883 in range(len(v2_s883)):
        v3_s883 = v2_s883[v1_s883]
        if v4_s883(v3_s883):
            v0_s883.append(v3_s883)
    return cfg

def step_203(cfg):
    v0_s203 = []
    for v1_s203 in range(len(v2_s203)):
        if v3_s203(v2_s203[v1_s203]):
            v0_s203 += [v2_s203[v1_s203]]
    return cfg

def step_434(cfg):
    v0_s434 = []
    for v1_s434 in range(len(v2_s434)):
        if v3_s434(v2_s434[v1_s434]):
            v0_s434 += [v2_s434[v1_s434]]
    return cfg

def step_665(cfg):
    v0_s665 = []
    for v1_s665 in range(len(v2_s665)):
        if v3_s665(v2_s665[v1_s665]):
            v0_s665 += [v2_s665[v1_s665]]
    return cfg

def step_896(cfg):
    v0_s896 = []
    for v1_s896 in range(len(v2_s896)):
        if v3_s896(v2_s896[v1_s896]):
            v0_s896 += [v2_s896[v1_s896]]
    return cfg

def step_216(cfg):
    v0_s216 = []
    for v1_s216 in range(len(v2_s216)):
        if v3_s216(v2_s216[v1_s216]):
            v0_s216 = v0_s216 + [v2_s216[v1_s216]]
    return cfg

def step_447(cfg):
    v0_s447 = []
    for v1_s447 in range(len(v2_s447)):
        if v3_s447(v2_s447[v1_s447]):
            v0_s447 = v0_s447 + [v2_s447[v1_s447]]
    return cfg

def step_678(cfg):
    v0_s678 = []
    for v1_s678 in range(len(v2_s678)):
        if v3_s678(v2_s678[v1_s678]):
            v0_s678 = v0_s678 + [v2_s678[v1_s678]]
    return cfg

def step_909(cfg):
    v0_s909 = []
    for v1_s909 in range(len(v2_s909)):
        if v3_s909(v2_s909[v1_s909]):
            v0_s909.append(v2_s909[v1_s909])
    return cfg

def step_229(cfg):
    v0_s229 = []
    for v1_s229 in range(len(v2_s229)):
        v3_s229 = v2_s229[v1_s229]
        if v4_s229(v3_s229):
            v0_s229.append(v3_s229)
    return cfg

def step_460(cfg):
    v0_s460 = []
    for v1_s460 in range(len(v2_s460)):
        v3_s460 = v2_s460[v1_s460]
        if v4_s460(v3_s460):
            v0_s460.append(v3_s460)
    return cfg

def step_691(cfg):
    v0_s691 = []
    for v1_s691 in range(len(v2_s691)):
        v3_s691 = v2_s691[v1_s691]
        if v4_s691(v3_s691):
            v0_s691.append(v3_s691)
    return cfg
